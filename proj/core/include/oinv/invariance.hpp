#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "oinv/isometry.hpp"
#include "oinv/metric.hpp"
#include "oinv/polynomial.hpp"

namespace oinv {

/// A Lie algebra element that does not annihilate f, with the nonzero
/// derivative X.f.
struct LieWitness {
  LieAlgebraElement element;
  Polynomial derivative;
};

/// A group element that moves f, with the nonzero difference f(Q.v) - f(v).
struct GroupWitness {
  Isometry isometry;
  Polynomial difference;
};

using Witness = std::variant<LieWitness, GroupWitness>;

enum class InvarianceStatus { Invariant, NotInvariant };

class InvarianceVerdict {
 public:
  static InvarianceVerdict invariant() { return InvarianceVerdict(std::nullopt); }
  /// Throws Error if the witness polynomial is zero.
  static InvarianceVerdict not_invariant(Witness witness);

  InvarianceStatus status() const noexcept {
    return witness_ ? InvarianceStatus::NotInvariant : InvarianceStatus::Invariant;
  }
  bool is_invariant() const noexcept { return !witness_.has_value(); }
  const std::optional<Witness>& witness() const noexcept { return witness_; }
  /// The witness's derivative or difference polynomial; zero when invariant.
  Polynomial witness_polynomial() const;

 private:
  explicit InvarianceVerdict(std::optional<Witness> w) : witness_(std::move(w)) {}
  std::optional<Witness> witness_;
};

/// sum_k sum_{a,b} X[a,b] x[k,b] df/dx[k,a]. Throws ForeignVariable if f
/// is not a polynomial over the coordinates of ctx.
Polynomial lie_derivative(const GramContext& ctx, const LieAlgebraElement& x,
                          const Polynomial& f);

/// f(Q e_1, ..., Q e_m): substitutes x[k,a] -> sum_b Q[a,b] x[k,b].
/// Throws ForeignVariable like lie_derivative.
Polynomial pullback_by_isometry(const GramContext& ctx, const Isometry& q,
                                const Polynomial& f);

/// Exact decision: f is invariant iff every so_basis element annihilates
/// it and every component representative fixes it. The witness is the
/// first failure, Lie basis elements before representatives.
InvarianceVerdict check_invariant(const GramContext& ctx, const Polynomial& f);

/// Magnitude used for the Cayley coefficients of randomized trials.
inline constexpr std::int64_t kRandomizedMagnitude = 6;

/// One-sided test. Trial t samples sample_isometry(sig,
/// derive_seed(seed, t), kRandomizedMagnitude) and the first isometry that
/// moves f becomes the witness. An Invariant result is probabilistic.
InvarianceVerdict randomized_invariance_check(const GramContext& ctx,
                                              const Polynomial& f, int trials,
                                              std::uint64_t seed);

}  // namespace oinv
