#include "oinv/metric.hpp"

#include <sstream>

#include "oinv/errors.hpp"
#include "oinv/random.hpp"

namespace oinv {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw DimensionMismatch("signature needs p, q >= 0 and p + q >= 1");
  if (p + q > Variable::kMaxIndex)
    throw DimensionMismatch("signature dimension exceeds the variable index range");
}

Matrix Signature::metric() const {
  std::vector<Rational> diag;
  for (int a = 1; a <= n(); ++a) diag.emplace_back(sign(a));
  return Matrix::diagonal(diag);
}

GramContext::GramContext(Signature signature, int vectors)
    : signature_(signature), m_(vectors) {
  if (vectors < 1 || vectors > Variable::kMaxIndex)
    throw IndexOutOfRange("vector count must lie in 1..255");
  for (int i = 1; i <= m_; ++i)
    for (int j = i; j <= m_; ++j)
      gram_map_.emplace(Variable::y(i, j), gram_polynomial(*this, i, j));
}

std::vector<Variable> GramContext::coordinate_variables() const {
  std::vector<Variable> out;
  for (int k = 1; k <= m_; ++k)
    for (int a = 1; a <= n(); ++a) out.push_back(Variable::x(k, a));
  return out;
}

std::vector<Variable> GramContext::gram_variables() const {
  std::vector<Variable> out;
  for (int i = 1; i <= m_; ++i)
    for (int j = i; j <= m_; ++j) out.push_back(Variable::y(i, j));
  return out;
}

void GramContext::require_coordinate_polynomial(const Polynomial& p) const {
  for (Variable v : p.variables()) {
    if (v.is_gram())
      throw ForeignVariable("Gram symbol in a polynomial over vector coordinates");
    if (v.first() > m_ || v.second() > n()) {
      std::ostringstream msg;
      msg << "x[" << v.first() << ',' << v.second() << "] outside m=" << m_
          << ", n=" << n();
      throw ForeignVariable(msg.str());
    }
  }
}

void GramContext::require_gram_polynomial(const Polynomial& p) const {
  for (Variable v : p.variables()) {
    if (v.is_coord())
      throw ForeignVariable("vector coordinate in a polynomial over Gram symbols");
    if (v.second() > m_) {
      std::ostringstream msg;
      msg << "Y[" << v.first() << ',' << v.second() << "] outside m=" << m_;
      throw ForeignVariable(msg.str());
    }
  }
}

Polynomial gram_polynomial(const GramContext& ctx, int i, int j) {
  if (i < 1 || j < 1 || i > ctx.m() || j > ctx.m()) {
    std::ostringstream msg;
    msg << "gram pair (" << i << ',' << j << ") outside 1.." << ctx.m();
    throw IndexOutOfRange(msg.str());
  }
  Polynomial out;
  for (int a = 1; a <= ctx.n(); ++a) {
    Monomial term = Monomial(Variable::x(i, a)) * Monomial(Variable::x(j, a));
    out += Polynomial(term, Rational(ctx.signature().sign(a)));
  }
  return out;
}

namespace {

/// Laplace expansion along the first remaining row; `used` marks consumed
/// columns.
Polynomial laplace(const std::vector<std::vector<Polynomial>>& entries,
                   std::size_t row, std::vector<bool>& used) {
  const std::size_t size = entries.size();
  if (row == size) return Polynomial(Rational(1));
  Polynomial out;
  int sign = 1;
  for (std::size_t c = 0; c < size; ++c) {
    if (used[c]) continue;
    if (!entries[row][c].is_zero()) {
      used[c] = true;
      Polynomial sub = laplace(entries, row + 1, used);
      used[c] = false;
      out.add_scaled(entries[row][c] * sub, Rational(sign));
    }
    sign = -sign;
  }
  return out;
}

}  // namespace

Polynomial minor_polynomial(const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.empty())
    throw SizeMismatch("minor needs row and column index lists of equal, non-zero length");
  std::vector<std::vector<Polynomial>> entries(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      entries[r].emplace_back(Variable::y(rows[r], cols[c]));
  std::vector<bool> used(cols.size(), false);
  return laplace(entries, 0, used);
}

bool verify_minor_vanishes(const GramContext& ctx, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  for (int idx : rows)
    if (idx < 1 || idx > ctx.m()) throw IndexOutOfRange("minor row index outside 1..m");
  for (int idx : cols)
    if (idx < 1 || idx > ctx.m()) throw IndexOutOfRange("minor column index outside 1..m");
  return substitute(minor_polynomial(rows, cols), ctx.gram_substitution()).is_zero();
}

std::size_t gram_jacobian_rank(const GramContext& ctx, const Assignment& point) {
  const auto coords = ctx.coordinate_variables();
  for (Variable v : coords)
    if (!point.contains(v)) {
      std::ostringstream msg;
      msg << "no value assigned to x[" << v.first() << ',' << v.second() << ']';
      throw MissingAssignment(msg.str());
    }
  const auto& gram = ctx.gram_substitution();
  Matrix jacobian(gram.size(), coords.size());
  std::size_t r = 0;
  for (const auto& [y, poly] : gram) {
    for (std::size_t c = 0; c < coords.size(); ++c)
      jacobian(r, c) = evaluate(partial(poly, coords[c]), point);
    ++r;
  }
  return rank(jacobian);
}

Assignment random_point(const GramContext& ctx, std::uint64_t seed,
                        std::int64_t magnitude) {
  SeededRng rng(seed);
  Assignment point;
  for (Variable v : ctx.coordinate_variables()) point.emplace(v, rng.rational(magnitude));
  return point;
}

IndependenceReport independence_check(const GramContext& ctx, std::uint64_t seed,
                                      int max_attempts) {
  IndependenceReport report;
  report.expected = static_cast<std::size_t>(ctx.m() * (ctx.m() + 1) / 2);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Assignment point = random_point(ctx, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    const std::size_t r = gram_jacobian_rank(ctx, point);
    report.attempts = attempt + 1;
    if (attempt == 0 || r > report.rank) {
      report.rank = r;
      report.point = std::move(point);
    }
    if (report.rank >= report.expected) break;
  }
  return report;
}

}  // namespace oinv
