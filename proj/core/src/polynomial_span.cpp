#include "oinv/polynomial_span.hpp"

#include <iterator>

namespace oinv {

namespace {

void accumulate(std::map<std::size_t, Rational>& into,
                const std::map<std::size_t, Rational>& from, const Rational& scale) {
  for (const auto& [id, c] : from) {
    auto& slot = into[id];
    slot += scale * c;
    if (slot == 0) into.erase(id);
  }
}

}  // namespace

PolynomialSpan::Reduction PolynomialSpan::reduce(const Polynomial& target) const {
  Reduction out{target, {}};
  // Walk the remainder's monomials from the largest down. Subtracting a row
  // only touches monomials at or below its leading one, so a single
  // descending sweep suffices.
  const Monomial* cursor = nullptr;
  Monomial cursor_storage;
  while (true) {
    const auto& terms = out.remainder.terms();
    auto it = cursor ? terms.lower_bound(*cursor) : terms.end();
    if (it == terms.begin()) break;
    --it;
    cursor_storage = it->first;
    cursor = &cursor_storage;
    auto row = rows_.find(it->first);
    if (row == rows_.end()) continue;
    const Rational coeff = it->second;
    out.remainder.add_scaled(row->second.vector, -coeff);
    if (track_) accumulate(out.combination, row->second.combination, coeff);
  }
  return out;
}

bool PolynomialSpan::add(const Polynomial& generator, std::size_t id) {
  Reduction red = reduce(generator);
  if (red.remainder.is_zero()) return false;
  const auto& lead = *red.remainder.terms().rbegin();
  const Monomial lead_monomial = lead.first;
  const Rational inv = 1 / lead.second;
  Row row;
  row.vector = red.remainder * inv;
  if (track_) {
    // remainder = generator - sum c_i gen_i
    row.combination[id] = inv;
    accumulate(row.combination, red.combination, -inv);
  }
  rows_.emplace(lead_monomial, std::move(row));
  return true;
}

}  // namespace oinv
