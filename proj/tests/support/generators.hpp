// Seeded random generators shared by the unit and acceptance suites.
#pragma once

#include <cstdint>
#include <vector>

#include "oinv/fundamental.hpp"
#include "oinv/metric.hpp"
#include "oinv/polynomial.hpp"
#include "oinv/random.hpp"

namespace oinv::testing {

inline Rational small_rational(SeededRng& rng, std::int64_t magnitude = 5) {
  Rational r;
  do {
    r = rng.rational(magnitude);
  } while (r == 0);
  return r;
}

inline Monomial random_monomial(SeededRng& rng, const std::vector<Variable>& vars,
                                unsigned degree) {
  std::vector<Monomial::Factor> factors;
  for (unsigned d = 0; d < degree; ++d) {
    const auto idx = static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(vars.size()) - 1));
    factors.emplace_back(vars[idx], 1);
  }
  return Monomial::from_factors(std::move(factors));
}

/// Up to `max_terms` terms of degree <= max_degree over `vars`.
inline Polynomial random_polynomial(SeededRng& rng, const std::vector<Variable>& vars,
                                    int max_terms, unsigned max_degree) {
  Polynomial out;
  const auto terms = rng.uniform(0, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    const auto degree = static_cast<unsigned>(rng.uniform(0, max_degree));
    out += Polynomial(random_monomial(rng, vars, degree), small_rational(rng));
  }
  return out;
}

inline std::vector<Variable> small_variable_pool() {
  return {Variable::x(1, 1), Variable::x(1, 2), Variable::x(2, 1), Variable::y(1, 1),
          Variable::y(1, 2)};
}

inline Polynomial random_y_polynomial(SeededRng& rng, const GramContext& ctx, int max_terms,
                                      unsigned max_degree) {
  return random_polynomial(rng, ctx.gram_variables(), max_terms, max_degree);
}

inline Polynomial random_x_polynomial(SeededRng& rng, const GramContext& ctx, int max_terms,
                                      unsigned max_degree) {
  return random_polynomial(rng, ctx.coordinate_variables(), max_terms, max_degree);
}

/// sum of random Y-monomial cofactors (degree <= cofactor_degree) times
/// random enumerated minors. Zero when m <= n.
inline Polynomial random_ideal_element(SeededRng& rng, const GramContext& ctx, int minors_used,
                                       unsigned cofactor_degree) {
  const auto minors = enumerate_minors(ctx.n(), ctx.m());
  Polynomial out;
  if (minors.empty()) return out;
  for (int k = 0; k < minors_used; ++k) {
    const auto& id = minors[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(minors.size()) - 1))];
    Polynomial cofactor = random_y_polynomial(rng, ctx, 2, cofactor_degree);
    if (cofactor.is_zero()) cofactor = Polynomial(small_rational(rng));
    out += cofactor * minor_polynomial(id.rows, id.cols);
  }
  return out;
}

/// Signatures with 1 <= p + q <= max_n.
inline std::vector<Signature> signatures_up_to(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
  return out;
}

}  // namespace oinv::testing
