#include "oinv/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "oinv/errors.hpp"

namespace oinv {

namespace {

void check_index(int index, const char* what) {
  if (index < 1 || index > Variable::kMaxIndex) {
    std::ostringstream msg;
    msg << what << " index " << index << " outside 1.." << Variable::kMaxIndex;
    throw IndexOutOfRange(msg.str());
  }
}

}  // namespace

Variable Variable::x(int vector, int coord) {
  check_index(vector, "vector");
  check_index(coord, "coordinate");
  return Variable((static_cast<std::uint32_t>(vector) << 8) |
                  static_cast<std::uint32_t>(coord));
}

Variable Variable::y(int i, int j) {
  check_index(i, "gram");
  check_index(j, "gram");
  if (i > j) std::swap(i, j);
  return Variable((1u << 16) | (static_cast<std::uint32_t>(i) << 8) |
                  static_cast<std::uint32_t>(j));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors))) {}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial out;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().first == v) {
      out.factors_.back().second += e;
    } else {
      out.factors_.emplace_back(v, e);
    }
    out.degree_ += e;
  }
  return out;
}

unsigned Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const Factor& f, const Variable& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() ||
        (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial carrying the earlier variable is larger.
      return fa[i].first < fb[i].first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (fa[i].second != fb[i].second) return fa[i].second <=> fb[i].second;
  }
  // Equal degrees force equal lengths once all shared factors agree.
  return fa.size() <=> fb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

Polynomial::Polynomial(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& coefficient,
                            const Monomial& m) {
  if (coefficient == 0) return;
  for (const auto& [om, oc] : other.terms_) {
    Monomial key = m.is_one() ? om : om * m;
    auto [it, inserted] = terms_.try_emplace(std::move(key));
    it->second += coefficient * oc;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  const Polynomial& small = size() <= other.size() ? *this : other;
  const Polynomial& large = size() <= other.size() ? other : *this;
  Polynomial out;
  for (const auto& [m, c] : small.terms_) out.add_scaled(large, c, m);
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  if (scalar == 0) return {};
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c *= scalar;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial substitute(const Polynomial& p, const Substitution& map) {
  if (map.empty()) return p;
  // powers[v][e-1] = image(v)^e, filled lazily.
  std::map<Variable, std::vector<Polynomial>> powers;
  auto power_of = [&](Variable v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(map.at(v));
    while (cache.size() < e) cache.push_back(cache.back() * cache.front());
    return cache[e - 1];
  };

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial image(c);
    for (const auto& [v, e] : m.factors()) {
      if (map.contains(v)) {
        image = image * power_of(v, e);
        if (image.is_zero()) break;
      } else {
        kept.emplace_back(v, e);
      }
    }
    out.add_scaled(image, Rational(1), Monomial::from_factors(std::move(kept)));
  }
  return out;
}

Polynomial partial(const Polynomial& p, Variable v) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = m.factors();
    for (auto& f : factors)
      if (f.first == v) f.second -= 1;
    Monomial reduced = Monomial::from_factors(std::move(factors));
    terms[reduced] += c * e;
  }
  return Polynomial(std::move(terms));
}

Rational evaluate(const Polynomial& p, const Assignment& point) {
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) {
        std::ostringstream msg;
        msg << "no value assigned to " << (v.is_coord() ? "x[" : "Y[")
            << v.first() << ',' << v.second() << ']';
        throw MissingAssignment(msg.str());
      }
      Rational base = it->second;
      for (unsigned k = 0; k < e; ++k) value *= base;
    }
    total += value;
  }
  return total;
}

unsigned MultiDegree::total() const {
  unsigned sum = 0;
  for (unsigned d : per_block_) sum += d;
  return sum;
}

bool MultiDegree::divides(const MultiDegree& other) const {
  if (blocks() != other.blocks()) return false;
  for (std::size_t b = 0; b < blocks(); ++b)
    if (per_block_[b] > other.per_block_[b]) return false;
  return true;
}

MultiDegree MultiDegree::operator-(const MultiDegree& other) const {
  if (!other.divides(*this))
    throw SizeMismatch("multidegree difference would be negative");
  std::vector<unsigned> out(per_block_);
  for (std::size_t b = 0; b < blocks(); ++b) out[b] -= other.per_block_[b];
  return MultiDegree(std::move(out));
}

MultiDegree MultiDegree::operator+(const MultiDegree& other) const {
  if (blocks() != other.blocks()) throw SizeMismatch("multidegree block count");
  std::vector<unsigned> out(per_block_);
  for (std::size_t b = 0; b < blocks(); ++b) out[b] += other.per_block_[b];
  return MultiDegree(std::move(out));
}

MultiDegree multidegree(const Monomial& m, int blocks) {
  std::vector<unsigned> per_block(static_cast<std::size_t>(blocks), 0);
  auto bump = [&](int block, unsigned by) {
    if (block > blocks) {
      std::ostringstream msg;
      msg << "block index " << block << " exceeds " << blocks;
      throw IndexOutOfRange(msg.str());
    }
    per_block[static_cast<std::size_t>(block - 1)] += by;
  };
  for (const auto& [v, e] : m.factors()) {
    bump(v.first(), e);
    if (v.is_gram()) bump(v.second(), e);
  }
  return MultiDegree(std::move(per_block));
}

std::map<MultiDegree, Polynomial> multihomogeneous_parts(const Polynomial& p,
                                                         int blocks) {
  std::map<MultiDegree, Polynomial::TermMap> grouped;
  for (const auto& [m, c] : p.terms())
    grouped[multidegree(m, blocks)].emplace(m, c);
  std::map<MultiDegree, Polynomial> out;
  for (auto& [d, terms] : grouped) out.emplace(d, Polynomial(std::move(terms)));
  return out;
}

}  // namespace oinv
