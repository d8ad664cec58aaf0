#pragma once

#include <cstddef>
#include <map>

#include "oinv/polynomial.hpp"

namespace oinv {

/// Incrementally built echelon basis of the span of a list of generator
/// polynomials, viewed as vectors indexed by monomials.
///
/// Each stored row has a distinct leading (graded-lex largest) monomial
/// with coefficient 1. When combinations are tracked, every row also
/// records how it is written in the generators, so a reduction can report
/// target - remainder as an explicit generator combination.
class PolynomialSpan {
 public:
  explicit PolynomialSpan(bool track_combinations = true)
      : track_(track_combinations) {}

  struct Reduction {
    /// No monomial of the remainder is a leading monomial of the basis.
    Polynomial remainder;
    /// target - remainder = sum combination[id] * generator[id].
    std::map<std::size_t, Rational> combination;
  };

  /// Adds generator `id`. Returns false when it already lies in the span;
  /// such a generator keeps coefficient zero in every later combination.
  bool add(const Polynomial& generator, std::size_t id);

  Reduction reduce(const Polynomial& target) const;

  std::size_t dimension() const noexcept { return rows_.size(); }
  bool is_leading(const Monomial& m) const { return rows_.contains(m); }

 private:
  struct Row {
    Polynomial vector;
    std::map<std::size_t, Rational> combination;
  };
  bool track_;
  std::map<Monomial, Row, GradedLexLess> rows_;
};

}  // namespace oinv
