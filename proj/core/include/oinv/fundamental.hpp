/*
 * fundamental.hpp
 * ---------------
 * Gram-coordinate rewriting of invariants and the determinantal relation
 * ideal J_{n+1} generated by the (n+1)-minors of the symmetric matrix
 * (Y[i,j]).
 *
 * Everything here is graded linear algebra. J_{n+1} is multihomogeneous
 * in the block grading (a minor with rows R and columns C has multidegree
 * 1_R + 1_C), so each multidegree component of a polynomial is handled on
 * its own finite-dimensional piece:
 *
 *   I_mu = span{ u * M : M a minor, u a Y-monomial, deg(u) + deg(M) = mu }
 *
 * and the Gram monomials of multidegree mu span the invariants of that
 * multidegree.
 */
#pragma once

#include <compare>
#include <map>
#include <vector>

#include "oinv/errors.hpp"
#include "oinv/invariance.hpp"
#include "oinv/metric.hpp"
#include "oinv/polynomial.hpp"

namespace oinv {

/// Row and column index sets of a minor of (Y[i,j]).
struct MinorId {
  std::vector<int> rows;
  std::vector<int> cols;

  friend auto operator<=>(const MinorId&, const MinorId&) = default;
};

/// Multidegree 1_rows + 1_cols over m blocks.
MultiDegree minor_multidegree(const MinorId& id, int m);

/// All strictly increasing (n+1)-subsets R, C of 1..m with R <= C
/// lexicographically, R-major. Empty when m <= n.
std::vector<MinorId> enumerate_minors(int n, int m);

/// Every Y-monomial over 1..m with the given block multidegree, in
/// ascending graded-lex order.
std::vector<Monomial> gram_monomials(int m, const MultiDegree& degree);

/// Cofactor per minor with sum cofactor * minor equal to the certified
/// polynomial.
class MembershipCertificate {
 public:
  MembershipCertificate() = default;
  explicit MembershipCertificate(std::map<MinorId, Polynomial> combination);

  const std::map<MinorId, Polynomial>& combination() const noexcept { return combination_; }
  /// sum cofactor * minor_polynomial.
  Polynomial expand() const;
  bool certifies(const Polynomial& p) const { return expand() == p; }

 private:
  std::map<MinorId, Polynomial> combination_;
};

struct NormalForm {
  Polynomial representative;
  GramContext context;
};

/// Raised by fft_rewrite when the input has no Gram-coordinate expression.
/// Carries the exact checker's verdict with its witness.
class NotInvariant : public Error {
 public:
  NotInvariant(std::string message, InvarianceVerdict verdict)
      : Error(std::move(message)), verdict_(std::move(verdict)) {}
  const InvarianceVerdict& verdict() const noexcept { return verdict_; }

 private:
  InvarianceVerdict verdict_;
};

/// True iff P(y_ij) = 0. Throws ForeignVariable if P is not a Y-polynomial
/// of ctx.
bool kernel_test(const GramContext& ctx, const Polynomial& p);

/// A Y-polynomial P with P(y_ij) = f, reduced to normal form. Throws
/// NotInvariant (with the check_invariant witness) when none exists, and
/// ForeignVariable for non-coordinate input.
Polynomial fft_rewrite(const GramContext& ctx, const Polynomial& f);

/// Writes a kernel element as a combination of enumerated minors. Throws
/// NotInKernel if kernel_test fails and NoCertificateAtDegree if a
/// multidegree component has no combination at its own degree.
MembershipCertificate membership_certificate(const GramContext& ctx,
                                             const Polynomial& p);

/// Unique representative of P + J_{n+1} supported on standard monomials
/// (those that are not leading monomials of the ideal's graded pieces).
NormalForm normal_form(const GramContext& ctx, const Polynomial& p);

}  // namespace oinv
