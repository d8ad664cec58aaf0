#include <doctest.h>

#include "generators.hpp"
#include "oinv/errors.hpp"
#include "oinv/invariance.hpp"

using namespace oinv;

namespace {

Polynomial x(int k, int a) { return Polynomial(Variable::x(k, a)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }

const Matrix kRotation{{q(0), q(-1)}, {q(1), q(0)}};

/// det(x_1, ..., x_n): fixed by the identity component, negated by
/// reflections.
Polynomial vector_determinant(int n) {
  Polynomial out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Polynomial term{Rational(sign)};
    for (int k = 1; k <= n; ++k) term = term * x(k, perm[static_cast<std::size_t>(k - 1)]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("lie_derivative examples") {
  const GramContext ctx(Signature(2, 0), 1);
  const LieAlgebraElement rot(Signature(2, 0), kRotation);
  CHECK(lie_derivative(ctx, rot, gram_polynomial(ctx, 1, 1)).is_zero());
  CHECK(lie_derivative(ctx, rot, x(1, 1)) == -x(1, 2));
  CHECK(lie_derivative(ctx, rot, Polynomial(q(5))).is_zero());
  CHECK_THROWS_AS(lie_derivative(ctx, rot, Polynomial(Variable::y(1, 1))), ForeignVariable);
  CHECK_THROWS_AS(lie_derivative(ctx, rot, x(2, 1)), ForeignVariable);
  CHECK_THROWS_AS(lie_derivative(ctx, rot, x(1, 3)), ForeignVariable);
}

TEST_CASE("pullback_by_isometry examples") {
  for (const auto& sig : testing::signatures_up_to(3)) {
    const GramContext ctx(sig, 2);
    const Polynomial f = x(1, 1) * x(2, 1) + q(2);
    CHECK(pullback_by_isometry(ctx, Isometry::identity(sig), f) == f);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Isometry g = sample_isometry(sig, s, 4);
      for (int i = 1; i <= 2; ++i)
        for (int j = i; j <= 2; ++j)
          CHECK(pullback_by_isometry(ctx, g, gram_polynomial(ctx, i, j)) == gram_polynomial(ctx, i, j));
    }
  }
  const GramContext line(Signature(1, 0), 1);
  CHECK(pullback_by_isometry(line, Isometry(Signature(1, 0), Matrix{{q(-1)}}), x(1, 1)) == -x(1, 1));
}

TEST_CASE("check_invariant examples") {
  {
    const GramContext ctx(Signature(1, 1), 2);
    CHECK(check_invariant(ctx, gram_polynomial(ctx, 1, 2)).is_invariant());
  }
  {
    const GramContext ctx(Signature(2, 0), 1);
    const auto verdict = check_invariant(ctx, x(1, 1));
    REQUIRE(verdict.status() == InvarianceStatus::NotInvariant);
    const auto& w = std::get<LieWitness>(*verdict.witness());
    CHECK(w.element.matrix() == kRotation);
    CHECK(w.derivative == -x(1, 2));
  }
  {
    const GramContext ctx(Signature(2, 0), 2);
    const Polynomial disc = gram_polynomial(ctx, 1, 1) * gram_polynomial(ctx, 2, 2) -
                            gram_polynomial(ctx, 1, 2).pow(2);
    CHECK(check_invariant(ctx, disc).is_invariant());
  }
  {
    // Fixed by the identity component but not by the reflection: the
    // witness must be a component representative.
    const GramContext ctx(Signature(1, 1), 2);
    const auto verdict = check_invariant(ctx, vector_determinant(2));
    REQUIRE_FALSE(verdict.is_invariant());
    const auto& w = std::get<GroupWitness>(*verdict.witness());
    CHECK(w.isometry.matrix() == Matrix::diagonal({q(-1), q(1)}));
    CHECK(w.difference == vector_determinant(2) * q(-2));
  }
}

TEST_CASE("randomized_invariance_check examples") {
  const GramContext ctx(Signature(2, 0), 1);
  CHECK(randomized_invariance_check(ctx, Polynomial(), 3, 1).is_invariant());
  CHECK(randomized_invariance_check(ctx, gram_polynomial(ctx, 1, 1), 100, 1).is_invariant());

  const auto verdict = randomized_invariance_check(ctx, x(1, 1), 100, 7);
  REQUIRE_FALSE(verdict.is_invariant());
  const auto& w = std::get<GroupWitness>(*verdict.witness());
  // The witness is the first sampled isometry that moves x[1,1].
  int first = -1;
  for (int t = 0; t < 100 && first < 0; ++t) {
    const Isometry g = sample_isometry(Signature(2, 0), derive_seed(7, static_cast<std::uint64_t>(t)),
                                       kRandomizedMagnitude);
    if (!(g.matrix()(0, 0) == 1 && g.matrix()(0, 1) == 0)) first = t;
  }
  REQUIRE(first >= 0);
  const Isometry expected = sample_isometry(
      Signature(2, 0), derive_seed(7, static_cast<std::uint64_t>(first)), kRandomizedMagnitude);
  CHECK(w.isometry == expected);
  CHECK(w.difference ==
        x(1, 1) * (expected.matrix()(0, 0) - 1) + x(1, 2) * expected.matrix()(0, 1));
  CHECK(w.isometry.matrix() == (Matrix{{q(3, 5), q(4, 5)}, {q(4, 5), q(-3, 5)}}));

  CHECK_THROWS_AS(randomized_invariance_check(ctx, x(1, 1), 0, 1), Error);
}

TEST_CASE("lie_derivative is a derivation") {
  SeededRng rng(404);
  for (const auto& sig : testing::signatures_up_to(3)) {
    const GramContext ctx(sig, 2);
    const auto basis = so_basis(sig);
    for (const auto& xel : basis) {
      for (int trial = 0; trial < 15; ++trial) {
        const auto f = testing::random_x_polynomial(rng, ctx, 4, 3);
        const auto g = testing::random_x_polynomial(rng, ctx, 4, 3);
        REQUIRE(lie_derivative(ctx, xel, f * g) ==
                lie_derivative(ctx, xel, f) * g + f * lie_derivative(ctx, xel, g));
      }
    }
  }
}

TEST_CASE("pullback is a right action") {
  SeededRng rng(405);
  for (const auto& sig : testing::signatures_up_to(3)) {
    const GramContext ctx(sig, 2);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Isometry q1 = sample_isometry(sig, s, 3);
      const Isometry q2 = sample_isometry(sig, s + 500, 3);
      const auto f = testing::random_x_polynomial(rng, ctx, 4, 3);
      REQUIRE(pullback_by_isometry(ctx, q2, pullback_by_isometry(ctx, q1, f)) ==
              pullback_by_isometry(ctx, q1 * q2, f));
    }
  }
}

TEST_CASE("invariance holds iff it holds on every multihomogeneous part") {
  SeededRng rng(406);
  for (const auto& sig : testing::signatures_up_to(3)) {
    const GramContext ctx(sig, 2);
    for (int trial = 0; trial < 10; ++trial) {
      // Random invariant combination, optionally spoiled in one part.
      const auto p = testing::random_y_polynomial(rng, ctx, 4, 2);
      Polynomial f = substitute(p, ctx.gram_substitution());
      if (trial % 2 == 1) f += testing::random_x_polynomial(rng, ctx, 1, 2);
      bool parts_invariant = true;
      for (const auto& [d, part] : multihomogeneous_parts(f, ctx.m()))
        parts_invariant = parts_invariant && check_invariant(ctx, part).is_invariant();
      REQUIRE(check_invariant(ctx, f).is_invariant() == parts_invariant);
      if (trial % 2 == 0) REQUIRE(parts_invariant);
    }
  }
}
