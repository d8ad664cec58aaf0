/*
 * isometry.hpp
 * ------------
 * Exact rational elements of O(p,q) and of its Lie algebra.
 *
 * Rational points of the group come from two sources: the Cayley transform
 * Q = (I - A)(I + A)^-1 of a rational g-skew matrix A, and one fixed
 * representative per connected component. Cayley points have determinant 1
 * and lie in the identity component whenever ||A|| < 1; for indefinite
 * signatures a large A can land in the other determinant-1 component.
 * Multiplying a component representative by a Cayley point reaches every
 * component.
 *
 * Both wrapper types check their defining equation at construction.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "oinv/matrix.hpp"
#include "oinv/metric.hpp"

namespace oinv {

/// Matrix Q with Q^T G Q = G.
class Isometry {
 public:
  /// Throws DimensionMismatch on a shape error and InvalidGroupElement if
  /// the isometry equation fails.
  Isometry(Signature signature, Matrix matrix);

  static Isometry identity(Signature signature);

  const Matrix& matrix() const noexcept { return matrix_; }
  const Signature& signature() const noexcept { return signature_; }

  Isometry operator*(const Isometry& other) const;
  Isometry inverse() const;

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  Signature signature_;
  Matrix matrix_;
};

/// Matrix X with X^T G + G X = 0.
class LieAlgebraElement {
 public:
  /// Throws DimensionMismatch on a shape error and InvalidGroupElement if
  /// the skewness equation fails.
  LieAlgebraElement(Signature signature, Matrix matrix);

  const Matrix& matrix() const noexcept { return matrix_; }
  const Signature& signature() const noexcept { return signature_; }

  friend bool operator==(const LieAlgebraElement&, const LieAlgebraElement&) = default;

 private:
  Signature signature_;
  Matrix matrix_;
};

/// Throws DimensionMismatch unless m is n x n.
bool is_isometry(const Signature& sig, const Matrix& m);
bool is_lie_algebra_element(const Signature& sig, const Matrix& m);

/// Basis of the Lie algebra, one element per pair a < b in lexicographic
/// order: entry (b,a) is 1 and entry (a,b) is -g_a g_b.
std::vector<LieAlgebraElement> so_basis(const Signature& sig);

/// (I - A)(I + A)^-1. Throws SingularCayley when det(I + A) = 0.
Isometry cayley(const LieAlgebraElement& a);

/// One isometry per connected component of O(p,q)(R):
///   definite:   I, and the flip of the first axis
///   indefinite: I, D_s, D_t, D_s D_t, where D_s flips the first positive
///               axis and D_t the first negative axis.
std::vector<Isometry> component_representatives(const Signature& sig);

/// Component label of an isometry: sign of its determinant and, for
/// indefinite signatures, the sign of the determinant of its upper-left
/// p x p block (0 for definite signatures).
struct ComponentLabel {
  int det_sign = 0;
  int spacelike_sign = 0;
  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};
ComponentLabel component_of(const Isometry& q);

/// Deterministic in (signature, seed, magnitude). Procedure:
///   1. SeededRng(seed) picks a representative index uniformly.
///   2. For each so_basis element in order it draws a coefficient with
///      SeededRng::rational(magnitude); A is the resulting combination.
///   3. If I + A is singular, steps 2-3 repeat (at most 16 draws) before
///      falling back to A = 0.
///   4. Returns representative * cayley(A).
Isometry sample_isometry(const Signature& sig, std::uint64_t seed,
                         std::int64_t magnitude);

}  // namespace oinv
