#include "oinv/invariance.hpp"

#include "oinv/errors.hpp"
#include "oinv/random.hpp"

namespace oinv {

InvarianceVerdict InvarianceVerdict::not_invariant(Witness witness) {
  const bool zero = std::visit(
      [](const auto& w) {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, LieWitness>)
          return w.derivative.is_zero();
        else
          return w.difference.is_zero();
      },
      witness);
  if (zero) throw Error("a non-invariance witness needs a nonzero polynomial");
  return InvarianceVerdict(std::move(witness));
}

Polynomial InvarianceVerdict::witness_polynomial() const {
  if (!witness_) return {};
  if (const auto* lie = std::get_if<LieWitness>(&*witness_)) return lie->derivative;
  return std::get<GroupWitness>(*witness_).difference;
}

namespace {

void require_dimension(const GramContext& ctx, const Signature& sig) {
  if (!(ctx.signature() == sig))
    throw DimensionMismatch("group element signature differs from the context");
}

}  // namespace

Polynomial lie_derivative(const GramContext& ctx, const LieAlgebraElement& x,
                          const Polynomial& f) {
  ctx.require_coordinate_polynomial(f);
  require_dimension(ctx, x.signature());
  const Matrix& mat = x.matrix();
  const int n = ctx.n();
  Polynomial out;
  for (int k = 1; k <= ctx.m(); ++k) {
    for (int a = 1; a <= n; ++a) {
      Polynomial df = partial(f, Variable::x(k, a));
      if (df.is_zero()) continue;
      // (X e_k)_a = sum_b X[a,b] x[k,b]
      Polynomial flow;
      for (int b = 1; b <= n; ++b) {
        const Rational& coeff = mat(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
        if (coeff != 0) flow += Polynomial(Monomial(Variable::x(k, b)), coeff);
      }
      out += flow * df;
    }
  }
  return out;
}

Polynomial pullback_by_isometry(const GramContext& ctx, const Isometry& q,
                                const Polynomial& f) {
  ctx.require_coordinate_polynomial(f);
  require_dimension(ctx, q.signature());
  const Matrix& mat = q.matrix();
  const int n = ctx.n();
  Substitution map;
  for (Variable v : f.variables()) {
    const int k = v.first();
    const int a = v.second();
    Polynomial image;
    for (int b = 1; b <= n; ++b) {
      const Rational& coeff = mat(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
      if (coeff != 0) image += Polynomial(Monomial(Variable::x(k, b)), coeff);
    }
    map.emplace(v, std::move(image));
  }
  return substitute(f, map);
}

InvarianceVerdict check_invariant(const GramContext& ctx, const Polynomial& f) {
  ctx.require_coordinate_polynomial(f);
  const Signature& sig = ctx.signature();
  for (const auto& x : so_basis(sig)) {
    Polynomial d = lie_derivative(ctx, x, f);
    if (!d.is_zero()) return InvarianceVerdict::not_invariant(LieWitness{x, std::move(d)});
  }
  for (const auto& rep : component_representatives(sig)) {
    Polynomial diff = pullback_by_isometry(ctx, rep, f) - f;
    if (!diff.is_zero())
      return InvarianceVerdict::not_invariant(GroupWitness{rep, std::move(diff)});
  }
  return InvarianceVerdict::invariant();
}

InvarianceVerdict randomized_invariance_check(const GramContext& ctx,
                                              const Polynomial& f, int trials,
                                              std::uint64_t seed) {
  if (trials < 1) throw Error("randomized check needs at least one trial");
  ctx.require_coordinate_polynomial(f);
  if (f.is_constant()) return InvarianceVerdict::invariant();
  for (int t = 0; t < trials; ++t) {
    Isometry q = sample_isometry(ctx.signature(), derive_seed(seed, static_cast<std::uint64_t>(t)),
                                 kRandomizedMagnitude);
    Polynomial diff = pullback_by_isometry(ctx, q, f) - f;
    if (!diff.is_zero())
      return InvarianceVerdict::not_invariant(GroupWitness{std::move(q), std::move(diff)});
  }
  return InvarianceVerdict::invariant();
}

}  // namespace oinv
