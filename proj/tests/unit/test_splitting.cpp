#include <doctest.h>

#include <numeric>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/splitting.hpp"

using namespace thetakit;

TEST_CASE("trace of torsion points") {
  CHECK(trace_of_torsion({1, 1, 1, 3}, 3).value == Rational(1));
  CHECK(trace_of_torsion({2, 1, 1, 3}, 3).value == Rational(4));
  for (long g = 1; g <= 3; ++g)
    for (long r = 1; r <= 3; ++r)
      for (long k = 1; k <= 3; ++k)
        CHECK(trace_of_torsion({g, r, k, 3}, 1).value == Rational(verlinde_dim({g, 3 * r, 3 * k})));
  // coprimality is not needed for traces
  CHECK(trace_of_torsion({2, 2, 2, 3}, 3).value.sign() > 0);
}

TEST_CASE("hypotheses") {
  CHECK_THROWS_AS(trace_of_torsion({1, 1, 1, 2}, 1), HypothesisError);
  CHECK_THROWS_AS(trace_of_torsion({1, 1, 1, 9}, 2), HypothesisError);
  CHECK_THROWS_AS(multiplicity({1, 2, 2, 3}, 1), HypothesisError);
  CHECK_THROWS_AS(multiplicity({1, 1, 2, 4}, 1), HypothesisError);
  CHECK_THROWS_AS(multiplicity({1, 1, 2, 3}, 2), HypothesisError);
}

TEST_CASE("multiplicities against brute-force Fourier inversion") {
  struct Case {
    SplitQuery q;
    long trivial, full;
  };
  // second column: character of order 1, third: order h
  const Case cases[] = {
      {{1, 1, 1, 3}, 2, 1},
      {{2, 1, 1, 3}, 6, 2},
      {{2, 1, 2, 3}, 48, 39},
      {{2, 2, 1, 3}, 48, 39},
      {{1, 1, 4, 3}, 11, 10},
      {{2, 1, 1, 5}, 424, 408},
      {{2, 1, 2, 5}, 2236764, 2236683},
      {{1, 3, 2, 5}, 26152, 26150},
      {{2, 1, 4, 3}, 1880, 1855},
      {{2, 3, 2, 3}, 85638018, 85636768},
  };
  for (const auto& c : cases) {
    CAPTURE(c.q.g);
    CAPTURE(c.q.r);
    CAPTURE(c.q.k);
    CAPTURE(c.q.h);
    CHECK(multiplicity(c.q, 1) == BigInt(c.trivial));
    CHECK(multiplicity(c.q, c.q.h) == BigInt(c.full));
  }
}

TEST_CASE("h = 1 recovers the level-k rank") {
  for (long g = 1; g <= 3; ++g)
    for (long r = 1; r <= 4; ++r)
      for (long k = 1; k <= 4; ++k) {
        if (std::gcd(r, k) != 1) continue;
        const BigInt dim = verlinde_dim({g, r, k});
        const BigInt rg = ipow(BigInt(r), static_cast<unsigned long>(g));
        CHECK(BigInt(multiplicity({g, r, k, 1}, 1) * rg) == dim);
      }
}

TEST_CASE("closed form agrees with Fourier inversion on sampled characters") {
  const SplitQuery qs[] = {{1, 1, 2, 3}, {2, 1, 1, 3}, {1, 2, 3, 9}, {1, 1, 1, 15}, {2, 1, 2, 5}};
  for (const auto& q : qs) {
    for (long omega : divisors(q.h)) {
      const Rational closed(multiplicity(q, omega));
      for (const auto& xi : sample_characters(q.h, omega, q.g, 3)) {
        CHECK(xi.order() == omega);
        CHECK(multiplicity_oracle(q, xi) == closed);
      }
    }
  }
}

TEST_CASE("closed and inverted forms agree symbolically") {
  const SplitQuery qs[] = {{1, 1, 2, 3}, {2, 2, 1, 3}, {1, 3, 2, 5}, {1, 1, 1, 9}};
  for (const auto& q : qs)
    for (long omega : divisors(q.h))
      for (const auto& xi : sample_characters(q.h, omega, q.g, 2)) {
        VForm diff = multiplicity_form(q, omega);
        for (auto t : multiplicity_oracle_form(q, xi)) {
          t.coefficient = -t.coefficient;
          diff.push_back(t);
        }
        CHECK(normalize(diff).empty());
      }
}

TEST_CASE("rank consistency") {
  const SplitQuery qs[] = {{1, 1, 1, 3}, {2, 1, 2, 3}, {1, 2, 3, 5}, {2, 1, 1, 5}, {1, 1, 2, 9}, {3, 1, 1, 3}};
  for (const auto& q : qs) {
    CHECK(check_rank_consistency(q, false));
    CHECK(check_rank_consistency(q, true));
  }
}

TEST_CASE("level-rank symmetry of multiplicities") {
  for (long g = 1; g <= 2; ++g)
    for (long r = 1; r <= 3; ++r)
      for (long k = 1; k <= 3; ++k) {
        if (std::gcd(r, k) != 1) continue;
        for (long omega : {1L, 3L}) {
          CHECK(multiplicity({g, r, k, 3}, omega) == multiplicity({g, k, r, 3}, omega));
        }
      }
}

TEST_CASE("float evaluation tracks the exact value") {
  const SplitQuery q{2, 1, 2, 5};
  const Real f = multiplicity_float(q, 5);
  CHECK(f.to_double() == doctest::Approx(2236683.0).epsilon(1e-12));
  CHECK(trace_of_torsion_float(q, 1).to_double() == doctest::Approx(verlinde_dim({2, 5, 10}).get_d()).epsilon(1e-12));
}
