#include <doctest.h>

#include <random>

#include "thetakit/errors.hpp"
#include "thetakit/heisenberg.hpp"

using namespace thetakit;

namespace {

HeisenbergElement random_element(long m, long g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(0, m - 1);
  HeisenbergElement h = HeisenbergElement::identity(m, g);
  h.t = u(rng);
  for (long i = 0; i < g; ++i) {
    h.x[static_cast<size_t>(i)] = u(rng);
    h.y[static_cast<size_t>(i)] = u(rng);
  }
  return h;
}

using Dense = std::vector<std::vector<CycNum>>;

Dense dense_mul(const Dense& A, const Dense& B) {
  const size_t n = A.size();
  const long m = A[0][0].conductor();
  Dense C(n, std::vector<CycNum>(n, CycNum(m)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!B[k][j].is_zero()) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace

TEST_CASE("group law") {
  std::mt19937_64 rng(3);
  for (long m : {3L, 5L, 9L})
    for (long g = 1; g <= 3; ++g)
      for (int i = 0; i < 30; ++i) {
        const auto a = random_element(m, g, rng), b = random_element(m, g, rng), c = random_element(m, g, rng);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, inverse(a)) == HeisenbergElement::identity(m, g));
        CHECK(multiply(inverse(a), a) == HeisenbergElement::identity(m, g));
        auto z = HeisenbergElement::identity(m, g);
        z.t = a.t;
        CHECK(multiply(z, b) == multiply(b, z));
      }
}

TEST_CASE("Schrodinger representations") {
  const auto triv = schrodinger_rep(1, 1, 2);
  CHECK(triv.dimension() == 1);
  CHECK(check_schrodinger_irreducible(triv));

  const auto r3 = schrodinger_rep(3, 1, 1);
  CHECK(r3.dimension() == 3);
  auto c = HeisenbergElement::identity(3, 1);
  c.t = 1;
  CHECK(r3.character(c) == CycNum::zeta(3, 1) * Rational(3));

  const auto r5 = schrodinger_rep(5, 2, 1);
  c = HeisenbergElement::identity(5, 1);
  c.t = 1;
  const auto M = r5.matrix(c);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) CHECK(M[i][j] == (i == j ? CycNum::zeta(5, 2) : CycNum(5)));

  CHECK_THROWS_AS(schrodinger_rep(3, 3, 1), HypothesisError);
  CHECK_THROWS_AS(schrodinger_rep(4, 1, 1), HypothesisError);
}

TEST_CASE("dense matrices multiply like the group") {
  std::mt19937_64 rng(11);
  for (long m : {3L, 5L})
    for (long g = 1; g <= 2; ++g)
      for (long n = 1; n < m; ++n) {
        const auto rep = schrodinger_rep(m, n, g);
        for (int i = 0; i < 5; ++i) {
          const auto a = random_element(m, g, rng), b = random_element(m, g, rng);
          CHECK(dense_mul(rep.matrix(a), rep.matrix(b)) == rep.matrix(multiply(a, b)));
        }
      }
}

TEST_CASE("Schrodinger characters have norm one") {
  for (long n = 1; n < 3; ++n) CHECK(check_schrodinger_irreducible(schrodinger_rep(3, n, 1)));
  for (long n = 1; n < 5; ++n) CHECK(check_schrodinger_irreducible(schrodinger_rep(5, n, 1)));
  CHECK(check_schrodinger_irreducible(schrodinger_rep(3, 2, 2)));
  CHECK(check_schrodinger_irreducible(schrodinger_rep(9, 4, 1)));
}

TEST_CASE("irreducible census") {
  auto census = irrep_census(3, 1);
  REQUIRE(census.size() == 3);
  CHECK(census[0].dimension == 1);
  CHECK(census[0].multiplicity == 9);
  CHECK(census[1].dimension == 3);
  CHECK(census[1].multiplicity == 1);
  CHECK(census[2].dimension == 3);

  census = irrep_census(5, 1);
  long ones = 0, fives = 0, squares = 0;
  for (const auto& c : census) {
    if (c.dimension == 1) ones += c.multiplicity;
    if (c.dimension == 5) fives += c.multiplicity;
    squares += c.multiplicity * c.dimension * c.dimension;
  }
  CHECK(ones == 25);
  CHECK(fives == 4);
  CHECK(squares == 125);

  census = irrep_census(1, 1);
  REQUIRE(census.size() == 1);
  CHECK(census[0].dimension == 1);

  // composite modulus: weights 3 and 6 factor through the group mod 3
  census = irrep_census(9, 1);
  CHECK(census[3].dimension == 3);
  CHECK(census[3].multiplicity == 9);
  CHECK(census[1].dimension == 9);

  census = irrep_census(3, 2);
  CHECK(census[1].dimension == 9);
  CHECK(census[0].multiplicity == 81);

  CHECK_THROWS_AS(irrep_census(7, 3), BudgetError);
  CHECK_THROWS_AS(irrep_census(4, 1), HypothesisError);
}
