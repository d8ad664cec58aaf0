#include "oinv/fundamental.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "oinv/polynomial_span.hpp"

namespace oinv {

MultiDegree minor_multidegree(const MinorId& id, int m) {
  std::vector<unsigned> per_block(static_cast<std::size_t>(m), 0);
  for (int r : id.rows) per_block[static_cast<std::size_t>(r - 1)] += 1;
  for (int c : id.cols) per_block[static_cast<std::size_t>(c - 1)] += 1;
  return MultiDegree(std::move(per_block));
}

std::vector<MinorId> enumerate_minors(int n, int m) {
  const int size = n + 1;
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  std::function<void(int)> choose = [&](int next) {
    if (static_cast<int>(current.size()) == size) {
      subsets.push_back(current);
      return;
    }
    for (int v = next; v <= m; ++v) {
      current.push_back(v);
      choose(v + 1);
      current.pop_back();
    }
  };
  if (size <= m) choose(1);
  std::vector<MinorId> out;
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = r; c < subsets.size(); ++c) out.push_back({subsets[r], subsets[c]});
  return out;
}

std::vector<Monomial> gram_monomials(int m, const MultiDegree& degree) {
  if (degree.blocks() != static_cast<std::size_t>(m))
    throw SizeMismatch("multidegree block count differs from m");
  std::vector<Variable> vars;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) vars.push_back(Variable::y(i, j));

  std::vector<Monomial> out;
  std::vector<unsigned> remaining = degree.per_block();
  std::vector<Monomial::Factor> factors;
  // Assign an exponent to each Y[i,j] in turn; a block's budget must be
  // exhausted once no later variable touches it.
  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    if (idx == vars.size()) {
      for (unsigned r : remaining)
        if (r != 0) return;
      out.push_back(Monomial::from_factors(factors));
      return;
    }
    const Variable v = vars[idx];
    const auto i = static_cast<std::size_t>(v.first() - 1);
    const auto j = static_cast<std::size_t>(v.second() - 1);
    // Block i receives no contribution after the last Y[i,*].
    const bool last_for_i = (j == static_cast<std::size_t>(m - 1));
    unsigned max_e = (i == j) ? remaining[i] / 2 : std::min(remaining[i], remaining[j]);
    for (unsigned e = 0; e <= max_e; ++e) {
      const unsigned use_i = (i == j) ? 2 * e : e;
      if (last_for_i && remaining[i] - use_i != 0) continue;
      remaining[i] -= use_i;
      if (i != j) remaining[j] -= e;
      if (e > 0) factors.emplace_back(v, e);
      walk(idx + 1);
      if (e > 0) factors.pop_back();
      remaining[i] += use_i;
      if (i != j) remaining[j] += e;
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

MembershipCertificate::MembershipCertificate(std::map<MinorId, Polynomial> combination)
    : combination_(std::move(combination)) {
  std::erase_if(combination_, [](const auto& kv) { return kv.second.is_zero(); });
}

Polynomial MembershipCertificate::expand() const {
  Polynomial out;
  for (const auto& [id, cofactor] : combination_)
    out += cofactor * minor_polynomial(id.rows, id.cols);
  return out;
}

namespace {

struct IdealGenerator {
  std::size_t minor;  // index into the enumerated minors
  Monomial cofactor;
};

/// Generators u * M of the ideal piece I_mu, in a fixed order: minors in
/// enumeration order, cofactor monomials ascending.
struct IdealPiece {
  std::vector<IdealGenerator> generators;
  PolynomialSpan span;
};

IdealPiece build_ideal_piece(const std::vector<MinorId>& minors,
                             const std::vector<Polynomial>& minor_polys, int m,
                             const MultiDegree& degree, bool track) {
  IdealPiece piece{{}, PolynomialSpan(track)};
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const MultiDegree md = minor_multidegree(minors[k], m);
    if (!md.divides(degree)) continue;
    for (const Monomial& u : gram_monomials(m, degree - md)) {
      Polynomial product;
      product.add_scaled(minor_polys[k], Rational(1), u);
      piece.span.add(product, piece.generators.size());
      piece.generators.push_back({k, u});
    }
  }
  return piece;
}

std::vector<Polynomial> minor_polynomials(const std::vector<MinorId>& minors) {
  std::vector<Polynomial> out;
  out.reserve(minors.size());
  for (const auto& id : minors) out.push_back(minor_polynomial(id.rows, id.cols));
  return out;
}

Polynomial reduce_modulo_ideal(const GramContext& ctx, const Polynomial& p) {
  const auto minors = enumerate_minors(ctx.n(), ctx.m());
  if (minors.empty()) return p;
  const auto polys = minor_polynomials(minors);
  Polynomial out;
  for (const auto& [degree, part] : multihomogeneous_parts(p, ctx.m())) {
    IdealPiece piece = build_ideal_piece(minors, polys, ctx.m(), degree, false);
    out += piece.span.reduce(part).remainder;
  }
  return out;
}

[[noreturn]] void raise_not_invariant(const GramContext& ctx, const Polynomial& f,
                                      const std::string& reason) {
  InvarianceVerdict verdict = check_invariant(ctx, f);
  if (verdict.is_invariant())
    throw std::logic_error("rewrite failed (" + reason +
                           ") for a polynomial the exact checker accepts");
  throw NotInvariant("polynomial is not invariant: " + reason, std::move(verdict));
}

}  // namespace

bool kernel_test(const GramContext& ctx, const Polynomial& p) {
  ctx.require_gram_polynomial(p);
  return substitute(p, ctx.gram_substitution()).is_zero();
}

Polynomial fft_rewrite(const GramContext& ctx, const Polynomial& f) {
  ctx.require_coordinate_polynomial(f);
  const auto parts = multihomogeneous_parts(f, ctx.m());
  // -I negates every part of odd total degree.
  for (const auto& [degree, part] : parts)
    if (degree.total() % 2 != 0) raise_not_invariant(ctx, f, "odd-degree component");

  Polynomial rewritten;
  for (const auto& [degree, part] : parts) {
    std::vector<Monomial> candidates = gram_monomials(ctx.m(), degree);
    PolynomialSpan span;
    for (std::size_t id = 0; id < candidates.size(); ++id)
      span.add(substitute(Polynomial(candidates[id], Rational(1)), ctx.gram_substitution()), id);
    auto reduction = span.reduce(part);
    if (!reduction.remainder.is_zero())
      raise_not_invariant(ctx, f, "component outside the span of Gram monomials");
    for (const auto& [id, c] : reduction.combination)
      rewritten += Polynomial(candidates[id], c);
  }
  return normal_form(ctx, rewritten).representative;
}

MembershipCertificate membership_certificate(const GramContext& ctx,
                                             const Polynomial& p) {
  if (!kernel_test(ctx, p))
    throw NotInKernel("polynomial does not vanish on the Gram map");
  const auto minors = enumerate_minors(ctx.n(), ctx.m());
  const auto polys = minor_polynomials(minors);
  std::map<MinorId, Polynomial> cofactors;
  for (const auto& [degree, part] : multihomogeneous_parts(p, ctx.m())) {
    IdealPiece piece = build_ideal_piece(minors, polys, ctx.m(), degree, true);
    auto reduction = piece.span.reduce(part);
    if (!reduction.remainder.is_zero()) {
      std::ostringstream msg;
      msg << "no minor combination in multidegree (";
      for (std::size_t b = 0; b < degree.blocks(); ++b) msg << (b ? "," : "") << degree[b];
      msg << ")";
      throw NoCertificateAtDegree(msg.str());
    }
    for (const auto& [id, c] : reduction.combination) {
      const auto& gen = piece.generators[id];
      cofactors[minors[gen.minor]] += Polynomial(gen.cofactor, c);
    }
  }
  return MembershipCertificate(std::move(cofactors));
}

NormalForm normal_form(const GramContext& ctx, const Polynomial& p) {
  ctx.require_gram_polynomial(p);
  return NormalForm{reduce_modulo_ideal(ctx, p), ctx};
}

}  // namespace oinv
