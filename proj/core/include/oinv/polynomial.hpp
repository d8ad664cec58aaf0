/*
 * polynomial.hpp
 * --------------
 * Sparse multivariate polynomials with exact rational coefficients.
 *
 * Variables live in a structured namespace:
 *   x[k,a]  coordinate a of the k-th vector argument (vector coordinates)
 *   Y[i,j]  free symmetric Gram symbol, stored with i <= j
 *
 * All vector coordinates precede all Gram symbols in the variable order;
 * within each kind the order is lexicographic on the index pair. Monomials
 * are ordered graded-lexicographically over that variable order. A
 * Polynomial is a map Monomial -> Rational with no zero coefficients, so
 * equal polynomials have identical term maps.
 *
 * Indices are 1-based and limited to 1..255.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "oinv/rational.hpp"

namespace oinv {

enum class VarKind : std::uint8_t { VectorCoord = 0, GramSymbol = 1 };

class Variable {
 public:
  static constexpr int kMaxIndex = 255;

  /// Coordinate `coord` of vector argument `vector`.
  static Variable x(int vector, int coord);
  /// Gram symbol Y[i,j]; the pair is normalized so that first <= second.
  static Variable y(int i, int j);

  VarKind kind() const noexcept { return static_cast<VarKind>(key_ >> 16); }
  bool is_coord() const noexcept { return kind() == VarKind::VectorCoord; }
  bool is_gram() const noexcept { return kind() == VarKind::GramSymbol; }
  /// Vector index k for x[k,a]; i for Y[i,j].
  int first() const noexcept { return static_cast<int>((key_ >> 8) & 0xff); }
  /// Coordinate index a for x[k,a]; j for Y[i,j].
  int second() const noexcept { return static_cast<int>(key_ & 0xff); }

  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  explicit Variable(std::uint32_t key) : key_(key) {}
  std::uint32_t key_;
};

/// Product of variable powers. Exponents are positive; the empty monomial
/// is 1.
class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(Variable v, unsigned exponent = 1);
  /// Factors may come in any order and repeat; zero exponents are dropped.
  Monomial(std::initializer_list<Factor> factors);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(Variable v) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; ties are broken
/// by comparing exponents variable by variable in the Variable order, the
/// larger exponent on the earliest differing variable being the larger
/// monomial.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex(a, b) < 0;
  }
};

class Polynomial {
 public:
  /// Terms in ascending graded-lex order.
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& coefficient);
  /// Zero coefficients are removed.
  explicit Polynomial(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const noexcept { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Monomial& m) const;
  std::set<Variable> variables() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial pow(unsigned exponent) const;

  /// Adds coefficient * m * other in place.
  void add_scaled(const Polynomial& other, const Rational& coefficient,
                  const Monomial& m = Monomial());

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) {
  return p * scalar;
}

using Substitution = std::map<Variable, Polynomial>;
using Assignment = std::map<Variable, Rational>;

/// Image of p under the ring homomorphism sending each mapped variable to
/// its image and fixing the others.
Polynomial substitute(const Polynomial& p, const Substitution& map);

/// Formal partial derivative.
Polynomial partial(const Polynomial& p, Variable v);

/// Throws MissingAssignment if a variable of p has no value.
Rational evaluate(const Polynomial& p, const Assignment& point);

/// Block degrees of a monomial over m vector arguments. x[k,a] adds 1 to
/// block k; Y[i,j] adds 1 to blocks i and j (2 to block i when i == j).
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<unsigned> per_block)
      : per_block_(std::move(per_block)) {}

  const std::vector<unsigned>& per_block() const noexcept { return per_block_; }
  std::size_t blocks() const noexcept { return per_block_.size(); }
  unsigned operator[](std::size_t block) const { return per_block_[block]; }
  unsigned total() const;
  /// Componentwise <=.
  bool divides(const MultiDegree& other) const;
  MultiDegree operator-(const MultiDegree& other) const;
  MultiDegree operator+(const MultiDegree& other) const;

  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<unsigned> per_block_;
};

/// Throws IndexOutOfRange if the monomial uses a block index above m.
MultiDegree multidegree(const Monomial& m, int blocks);

/// Splits p into its multihomogeneous parts; the parts sum to p.
std::map<MultiDegree, Polynomial> multihomogeneous_parts(const Polynomial& p,
                                                         int blocks);

}  // namespace oinv
