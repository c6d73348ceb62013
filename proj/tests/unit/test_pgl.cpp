#include <doctest.h>

#include <numeric>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/pgl.hpp"

using namespace thetakit;

TEST_CASE("coperiods") {
  CHECK(coperiod({6, {1, 3, 5}}, 3, 3) == 3);
  CHECK(coperiod({6, {1, 2, 3}}, 3, 3) == 1);
  CHECK(coperiod({4, {1, 3}}, 2, 2) == 2);
  CHECK(coperiod({12, {2, 3, 8, 9}}, 4, 8) == 2);
  CHECK(coperiod({12, {1, 4, 7, 10}}, 4, 8) == 4);
  CHECK(coperiod({9, {1, 4, 7}}, 3, 6) == 3);
}

TEST_CASE("xi weights") {
  CHECK(xi_weight({6, {1, 2, 3}}, 1, 3, 3, 2) == Rational(1));
  CHECK(xi_weight({6, {1, 3, 5}}, 3, 3, 3, 1) == Rational(1));
  CHECK(xi_weight({6, {1, 2, 3}}, 3, 3, 3, 2) == Rational(1, 81));
  CHECK_THROWS_AS(xi_weight({6, {1, 2, 3}}, 2, 3, 3, 2), HypothesisError);
}

TEST_CASE("query hypotheses") {
  CHECK_THROWS_AS(pgl_dim_charsum({1, 2, 2, 2}), HypothesisError);
  CHECK_THROWS_AS(pgl_dim_charsum({1, 3, 4, 3}), HypothesisError);
  CHECK_THROWS_AS(pgl_dim_coperiodic({1, 3, 3, 2}), HypothesisError);
}

TEST_CASE("worked dimensions") {
  CHECK(pgl_dim_charsum({1, 3, 3, 3}) == Rational(2));
  CHECK(pgl_dim_coperiodic({1, 3, 3, 3}) == Rational(2));
  for (long g = 1; g <= 3; ++g)
    for (long r = 1; r <= 7; r += 2)
      for (long k = 1; r + k <= 9; ++k) {
        const Rational dim(verlinde_dim({g, r, k}));
        CHECK(pgl_dim_charsum({g, r, k, 1}) == dim);
        CHECK(pgl_dim_coperiodic({g, r, k, 1}) == dim);
      }
}

TEST_CASE("both routes agree and are integral, r + k <= 12, g <= 3") {
  for (long g = 1; g <= 3; ++g)
    for (long r = 1; r <= 11; r += 2)
      for (long k = 1; r + k <= 12; ++k)
        for (long d : divisors(std::gcd(r, k))) {
          CAPTURE(g);
          CAPTURE(r);
          CAPTURE(k);
          CAPTURE(d);
          const Rational a = pgl_dim_charsum({g, r, k, d});
          const Rational b = pgl_dim_coperiodic({g, r, k, d});
          CHECK(a == b);
          CHECK(b.is_integer());
          CHECK(b.sign() >= 0);
        }
}

TEST_CASE("sine identities") {
  CHECK(check_sine_identity(2, Rational(1, 3)));
  CHECK(check_sine_identity(3, Rational(1, 4)));
  CHECK(check_sine_identity(2, Rational(1, 4)));
  CHECK_THROWS_AS(check_sine_identity(2, Rational(1, 2)), HypothesisError);
  for (long delta = 1; delta <= 6; ++delta)
    for (long den = 1; den <= 12; ++den)
      for (long num = -den; num <= 2 * den; ++num) {
        const Rational x(num, den);
        if ((x * Rational(delta)).is_integer()) continue;
        CHECK(check_sine_identity(delta, x));
      }
}

TEST_CASE("products over coperiodic sets") {
  CHECK(check_coperiodic_product({6, {1, 3, 5}}, 3, 3, 3));
  CHECK(check_coperiodic_product({4, {1, 3}}, 2, 2, 2));
  CHECK(check_coperiodic_product({6, {1, 2, 4}}, 3, 3, 1));
  CHECK_THROWS_AS(check_coperiodic_product({6, {1, 2, 3}}, 3, 3, 3), HypothesisError);
  long checked = 0;
  for (long n = 2; n <= 12; ++n)
    for (long r = 1; r < n; ++r)
      subsets::for_each(n, r, [&](std::uint64_t m) {
        const SubsetS S = subsets::to_subset(m, n);
        const long cop = coperiod(S, r, n - r);
        for (long delta : divisors(cop)) {
          CHECK(check_coperiodic_product(S, r, n - r, delta));
          ++checked;
        }
      });
  CHECK(checked > 4000);
}
