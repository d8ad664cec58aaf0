#pragma once

#include <cstdint>
#include <vector>

#include "oinv/matrix.hpp"
#include "oinv/polynomial.hpp"

namespace oinv {

/// Metric diag(+1 x p, -1 x q) on an n = p + q dimensional space.
class Signature {
 public:
  /// Throws DimensionMismatch when p + q == 0.
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  bool definite() const noexcept { return p_ == 0 || q_ == 0; }
  /// Diagonal entry of the metric for 1-based coordinate a.
  int sign(int a) const noexcept { return a <= p_ ? 1 : -1; }
  Matrix metric() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

/// A signature together with the number m of vector arguments. Fixes the
/// variable universe x[k,a] (1 <= k <= m, 1 <= a <= n) and Y[i,j]
/// (1 <= i <= j <= m).
class GramContext {
 public:
  /// Throws IndexOutOfRange when m < 1 or indices exceed Variable::kMaxIndex.
  GramContext(Signature signature, int vectors);

  const Signature& signature() const noexcept { return signature_; }
  int n() const noexcept { return signature_.n(); }
  int m() const noexcept { return m_; }

  /// x-variables in Variable order.
  std::vector<Variable> coordinate_variables() const;
  /// Y-variables in Variable order.
  std::vector<Variable> gram_variables() const;

  /// Y[i,j] -> y_ij for every pair; the pullback along the Gram map.
  const Substitution& gram_substitution() const noexcept { return gram_map_; }

  /// Throws ForeignVariable unless p uses only x[k,a] within range.
  void require_coordinate_polynomial(const Polynomial& p) const;
  /// Throws ForeignVariable unless p uses only Y[i,j] with j <= m.
  void require_gram_polynomial(const Polynomial& p) const;

 private:
  Signature signature_;
  int m_;
  Substitution gram_map_;
};

/// y_ij = sum_{a<=p} x[i,a] x[j,a] - sum_{a>p} x[i,a] x[j,a].
/// Requires 1 <= i, j <= m; throws IndexOutOfRange otherwise.
Polynomial gram_polynomial(const GramContext& ctx, int i, int j);

/// Determinant of (Y[r,c]) for r in rows, c in cols, expanded in the
/// Y-symbols. Sequences must have equal non-zero length (SizeMismatch) and
/// indices in 1..Variable::kMaxIndex (IndexOutOfRange). Order is taken as
/// given, so permuted or repeated indices give the alternating values.
Polynomial minor_polynomial(const std::vector<int>& rows,
                            const std::vector<int>& cols);

/// True iff the minor vanishes identically after Y[i,j] -> y_ij.
bool verify_minor_vanishes(const GramContext& ctx, const std::vector<int>& rows,
                           const std::vector<int>& cols);

/// Rank over Q of the Jacobian (d y_ij / d x[k,a]) at `point`.
/// Throws MissingAssignment if a coordinate is unassigned.
std::size_t gram_jacobian_rank(const GramContext& ctx, const Assignment& point);

/// Random rational point for the x-variables of ctx.
Assignment random_point(const GramContext& ctx, std::uint64_t seed,
                        std::int64_t magnitude = 9);

struct IndependenceReport {
  std::size_t rank = 0;
  std::size_t expected = 0;  // m(m+1)/2
  int attempts = 0;
  Assignment point;  // the point attaining `rank`
};

/// Jacobian rank at up to `max_attempts` seeded random points, stopping
/// at the first point of full rank m(m+1)/2; reports the best rank seen.
IndependenceReport independence_check(const GramContext& ctx, std::uint64_t seed,
                                      int max_attempts = 5);

}  // namespace oinv
