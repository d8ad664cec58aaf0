#include <doctest.h>

#include "generators.hpp"
#include "oinv/errors.hpp"
#include "oinv/fundamental.hpp"
#include "oinv/metric.hpp"
#include "oracles.hpp"

using namespace oinv;

namespace {

Polynomial x(int k, int a) { return Polynomial(Variable::x(k, a)); }
Polynomial y(int i, int j) { return Polynomial(Variable::y(i, j)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("signature") {
  const Signature s(2, 1);
  CHECK(s.n() == 3);
  CHECK(s.sign(2) == 1);
  CHECK(s.sign(3) == -1);
  CHECK(s.metric() == Matrix::diagonal({q(1), q(1), q(-1)}));
  CHECK_THROWS_AS(Signature(0, 0), DimensionMismatch);
  CHECK_THROWS_AS(GramContext(s, 0), IndexOutOfRange);
}

TEST_CASE("gram_polynomial examples") {
  CHECK(gram_polynomial(GramContext(Signature(1, 0), 1), 1, 1) == x(1, 1).pow(2));
  CHECK(gram_polynomial(GramContext(Signature(1, 1), 2), 1, 2) ==
        x(1, 1) * x(2, 1) - x(1, 2) * x(2, 2));
  CHECK(gram_polynomial(GramContext(Signature(2, 0), 2), 1, 2) ==
        x(1, 1) * x(2, 1) + x(1, 2) * x(2, 2));
  CHECK_THROWS_AS(gram_polynomial(GramContext(Signature(2, 0), 2), 1, 3), IndexOutOfRange);
}

TEST_CASE("gram_polynomial is symmetric") {
  for (const auto& sig : testing::signatures_up_to(3)) {
    const GramContext ctx(sig, 3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) CHECK(gram_polynomial(ctx, i, j) == gram_polynomial(ctx, j, i));
  }
}

TEST_CASE("minor_polynomial examples") {
  CHECK(minor_polynomial({1}, {1}) == y(1, 1));
  CHECK(minor_polynomial({1, 2}, {1, 2}) == y(1, 1) * y(2, 2) - y(1, 2).pow(2));

  // 3x3 against the Leibniz expansion.
  std::vector<std::vector<Polynomial>> entries(3);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) entries[static_cast<std::size_t>(r - 1)].push_back(y(r, c));
  const Polynomial expected = oracle::leibniz_determinant(entries);
  CHECK(expected.size() == 5);  // Y12*Y13*Y23 appears twice and merges
  CHECK(minor_polynomial({1, 2, 3}, {1, 2, 3}) == expected);

  CHECK_THROWS_AS(minor_polynomial({1, 2}, {1}), SizeMismatch);
  CHECK_THROWS_AS(minor_polynomial({}, {}), SizeMismatch);
  CHECK_THROWS_AS(minor_polynomial({0}, {1}), IndexOutOfRange);
}

TEST_CASE("minor_polynomial is alternating") {
  CHECK(minor_polynomial({2, 1}, {1, 3}) == -minor_polynomial({1, 2}, {1, 3}));
  CHECK(minor_polynomial({1, 3, 2}, {1, 2, 4}) == -minor_polynomial({1, 2, 3}, {1, 2, 4}));
  CHECK(minor_polynomial({1, 2}, {3, 1}) == -minor_polynomial({1, 2}, {1, 3}));
  CHECK(minor_polynomial({1, 1}, {1, 2}).is_zero());
  CHECK(minor_polynomial({1, 2, 3}, {2, 4, 2}).is_zero());
  // Transpose symmetry of the symmetric matrix.
  CHECK(minor_polynomial({1, 2}, {2, 3}) == minor_polynomial({2, 3}, {1, 2}));
}

TEST_CASE("verify_minor_vanishes examples") {
  CHECK(verify_minor_vanishes(GramContext(Signature(1, 0), 2), {1, 2}, {1, 2}));
  CHECK(verify_minor_vanishes(GramContext(Signature(1, 1), 3), {1, 2, 3}, {1, 2, 3}));
  CHECK_FALSE(verify_minor_vanishes(GramContext(Signature(2, 0), 2), {1, 2}, {1, 2}));
  CHECK_THROWS_AS(verify_minor_vanishes(GramContext(Signature(2, 0), 2), {1, 3}, {1, 2}),
                  IndexOutOfRange);
}

TEST_CASE("every (n+1)-minor vanishes on the Gram map (n <= 3, m <= 5)") {
  for (const auto& sig : testing::signatures_up_to(3)) {
    for (int m = sig.n() + 1; m <= 5; ++m) {
      const GramContext ctx(sig, m);
      for (const auto& id : enumerate_minors(sig.n(), m))
        REQUIRE(verify_minor_vanishes(ctx, id.rows, id.cols));
    }
  }
}

TEST_CASE("gram_jacobian_rank examples") {
  {
    const GramContext ctx(Signature(2, 0), 1);
    CHECK(gram_jacobian_rank(ctx, {{Variable::x(1, 1), q(3)}, {Variable::x(1, 2), q(-1, 2)}}) == 1);
  }
  {
    // Hand-written Jacobian of (y11, y12, y22) over (x11, x12, x21, x22) at
    // x1 = (1,0), x2 = (0,1): rows (2x11,2x12,0,0), (x21,x22,x11,x12),
    // (0,0,2x21,2x22).
    const Matrix hand{{q(2), q(0), q(0), q(0)}, {q(0), q(1), q(1), q(0)}, {q(0), q(0), q(0), q(2)}};
    REQUIRE(oracle::naive_rank(hand) == 3);
    const GramContext ctx(Signature(2, 0), 2);
    CHECK(gram_jacobian_rank(ctx, {{Variable::x(1, 1), q(1)},
                                   {Variable::x(1, 2), q(0)},
                                   {Variable::x(2, 1), q(0)},
                                   {Variable::x(2, 2), q(1)}}) == 3);
  }
  {
    // y11 = x11^2, y12 = x11 x21, y22 = x21^2 at (3/2, -2).
    const Rational a = q(3, 2);
    const Rational b = q(-2);
    const Matrix hand{{2 * a, q(0)}, {b, a}, {q(0), 2 * b}};
    REQUIRE(oracle::naive_rank(hand) == 2);
    const GramContext ctx(Signature(1, 0), 2);
    CHECK(gram_jacobian_rank(ctx, {{Variable::x(1, 1), a}, {Variable::x(2, 1), b}}) == 2);
  }
  const GramContext ctx(Signature(1, 0), 2);
  CHECK_THROWS_AS(gram_jacobian_rank(ctx, {{Variable::x(1, 1), q(1)}}), MissingAssignment);
}

TEST_CASE("Gram functions are independent when m <= n") {
  for (const auto& sig : testing::signatures_up_to(4)) {
    for (int m = 1; m <= sig.n(); ++m) {
      const auto report = independence_check(GramContext(sig, m), 31337);
      REQUIRE(report.expected == static_cast<std::size_t>(m * (m + 1) / 2));
      REQUIRE(report.rank == report.expected);
    }
  }
  // m > n: rank drops below m(m+1)/2.
  const auto report = independence_check(GramContext(Signature(1, 0), 2), 1);
  CHECK(report.rank == 2);
  CHECK(report.attempts == 5);
}
