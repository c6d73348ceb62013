#include <doctest.h>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/torsion.hpp"

using namespace thetakit;

TEST_CASE("totient symbol values") {
  for (long g = 1; g <= 3; ++g)
    for (long lambda = 0; lambda < 10; ++lambda) CHECK(totient_symbol({lambda, 1, g}) == Rational(1));
  CHECK(totient_symbol({3, 3, 1}) == Rational(8, 9));
  CHECK(totient_symbol({1, 3, 1}) == Rational(-1, 9));
  CHECK(totient_symbol({3, 9, 1}) == Rational(-1, 9));
  CHECK(totient_symbol({1, 9, 1}) == Rational(0));
  CHECK(totient_symbol({9, 9, 1}) == Rational(8, 9));
  CHECK(totient_symbol({0, 9, 2}) == Rational(80, 81));
  CHECK(totient_symbol({15, 15, 2}) == Rational(80, 81) * Rational(624, 625));
  CHECK(totient_symbol({5, 15, 1}) == Rational(-1, 9) * Rational(24, 25));
  CHECK_THROWS_AS(totient_symbol({1, 0, 1}), HypothesisError);
}

TEST_CASE("point and character orders") {
  CHECK(TorsionPoint{9, {3, 6}}.order() == 3);
  CHECK(TorsionPoint{9, {0, 0}}.order() == 1);
  CHECK(TorsionPoint{15, {5, 3, 0, 0}}.order() == 15);
  CHECK(CharacterLabel{5, {1, 2}}.pair(TorsionPoint{5, {3, 4}}) == 1);
}

TEST_CASE("counts of points of exact order") {
  CHECK(count_order(7, 1, 2) == 1);
  CHECK(count_order(3, 3, 1) == 8);
  CHECK(count_order(9, 9, 1) == 72);
  CHECK_THROWS_AS(count_order(9, 2, 1), HypothesisError);
  for (long g = 1; g <= 2; ++g)
    for (long h = 1; h <= (g == 1 ? 15 : 9); ++h)
      for (long d : divisors(h)) CHECK(count_order(h, d, g) == count_order_brute(h, d, g));
  CHECK(count_order(15, 15, 2) == count_order_brute(15, 15, 2));
}

TEST_CASE("orders partition the torsion") {
  for (long g = 1; g <= 3; ++g)
    for (long m = 1; m <= 30; ++m) CHECK(check_count_partition(m, g));
}

TEST_CASE("character sums over an order class") {
  CHECK(character_order_sum({3, {0, 0}}, 1) == Rational(8));
  CHECK(character_order_sum({3, {1, 0}}, 1) == Rational(-1));
  CHECK(character_order_sum({9, {3, 1}}, 9) == Rational(1));
  CHECK(character_order_sum_closed(3, 1, 1, 1) == Rational(8));
  CHECK(character_order_sum_closed(3, 3, 1, 1) == Rational(-1));
}

TEST_CASE("character sums match the closed form and depend only on the order") {
  for (long g = 1; g <= 2; ++g)
    for (long h : {3L, 5L, 9L}) {
      for (long omega : divisors(h)) {
        const auto xis = sample_characters(h, omega, g, 2);
        REQUIRE(!xis.empty());
        for (long delta : divisors(h)) {
          const Rational s = character_order_sum(xis.front(), delta);
          for (const auto& xi : xis) {
            CHECK(xi.order() == omega);
            CHECK(extract_rational(character_order_sum_brute(xi, delta)) == s);
          }
        }
      }
    }
}

TEST_CASE("sampled characters") {
  const auto xs = sample_characters(9, 3, 1, 3);
  CHECK(xs.size() == 3);
  CHECK(xs[0].coords != xs[1].coords);
  CHECK(sample_characters(9, 1, 2, 2).size() == 1);
}
