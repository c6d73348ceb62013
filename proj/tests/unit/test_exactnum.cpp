#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "thetakit/arith.hpp"
#include "thetakit/cyclotomic.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/modular.hpp"
#include "thetakit/parallel.hpp"
#include "thetakit/rational.hpp"
#include "thetakit/real.hpp"

using namespace thetakit;

namespace {

CycNum random_cyc(long n, std::mt19937_64& rng, bool nonzero = true) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  const long phi = CyclotomicField::get(n).degree();
  for (;;) {
    std::vector<Rational> c;
    for (long i = 0; i < phi; ++i) c.emplace_back(num(rng), den(rng));
    CycNum x(n, c);
    if (!nonzero || !x.is_zero()) return x;
  }
}

// Direct evaluation of the power-basis coordinates at exp(2 pi i / n).
std::complex<long double> embed_direct(const CycNum& a) {
  const long double pi = 3.141592653589793238462643383279502884L;
  std::complex<long double> z = 0;
  for (size_t j = 0; j < a.coeffs().size(); ++j)
    z += static_cast<long double>(a.coeffs()[j].to_double()) *
         std::polar(1.0L, 2 * pi * static_cast<long double>(j) / a.conductor());
  return z;
}

}  // namespace

TEST_CASE("rational values stay reduced") {
  Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).is_integer());
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), ConsistencyError);
  CHECK_THROWS(Rational(0).inverse());
  CHECK(Rational(8, 9).to_string() == "8/9");
  CHECK(Rational(-3).to_string() == "-3");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(30) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
  for (long n = 1; n <= 60; ++n) CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) - 1 == euler_phi(n));
}

TEST_CASE("field operations on small examples") {
  CHECK(cyc_mul(CycNum::zeta(4, 1), CycNum::zeta(4, 1)) == CycNum(4, Rational(-1)));
  CHECK(cyc_inv(CycNum(7, Rational(2))) == CycNum(7, Rational(1, 2)));
  CHECK(extract_rational(cyc_mul(CycNum::sine_square(3, 1), CycNum(3, Rational(1)))) == Rational(3));
  CHECK(extract_rational(CycNum(3, std::vector<Rational>{Rational(5, 2), Rational(0)})) == Rational(5, 2));
  CHECK_THROWS_AS(extract_rational(CycNum(3, std::vector<Rational>{Rational(1), Rational(1)})), NonRationalError);
  CycNum orbit(5);
  for (long j = 1; j < 5; ++j) orbit += CycNum::zeta(5, j);
  CHECK(extract_rational(orbit) == Rational(-1));
  CHECK_THROWS(CycNum(5) + CycNum(7));
  CHECK_THROWS(CycNum(5).inverse());
  CHECK_THROWS(CycNum(5, std::vector<Rational>{Rational(1)}));
  CHECK(CycNum::zeta(9, 9) == CycNum(9, Rational(1)));
  CHECK(CycNum::zeta(9, -1) * CycNum::zeta(9, 1) == CycNum(9, Rational(1)));
}

TEST_CASE("residual of a non-rational value is reported") {
  try {
    extract_rational(CycNum(5, std::vector<Rational>{Rational(1), Rational(-7, 2), Rational(0), Rational(3)}));
    FAIL("expected NonRationalError");
  } catch (const NonRationalError& e) {
    CHECK(e.max_residual() == "7/2");
  }
}

TEST_CASE("field axioms on sampled elements, n <= 30") {
  std::mt19937_64 rng(20240611);
  for (long n = 1; n <= 30; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const CycNum a = random_cyc(n, rng), b = random_cyc(n, rng), c = random_cyc(n, rng);
      const CycNum one(n, Rational(1));
      CHECK(a * a.inverse() == one);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == CycNum(n));
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK(a.pow(3) * a.pow(-3) == one);
    }
  }
}

TEST_CASE("numeric embedding matches the exact value") {
  std::mt19937_64 rng(7);
  for (long n = 1; n <= 30; ++n) {
    const CycNum a = random_cyc(n, rng) * random_cyc(n, rng);
    const auto [re, im] = a.embed(128);
    const auto z = embed_direct(a);
    const long double scale = std::max(1.0L, std::abs(z));
    CHECK(std::abs(re.to_double() - static_cast<double>(z.real())) / scale < 1e-9);
    CHECK(std::abs(im.to_double() - static_cast<double>(z.imag())) / scale < 1e-9);
  }
}

TEST_CASE("sine squares embed to 4 sin^2") {
  for (long n = 2; n <= 30; ++n)
    for (long d = 1; d < n; ++d) {
      const auto [re, im] = CycNum::sine_square(n, d).embed(128);
      const long double s = 2 * std::sin(3.141592653589793238462643383279502884L * d / n);
      CHECK(std::abs(re.to_double() - static_cast<double>(s * s)) < 1e-12);
      CHECK(std::abs(im.to_double()) < 1e-12);
    }
}

TEST_CASE("mpfr wrapper basics") {
  const Real x(Rational(1, 3), 200);
  CHECK(relative_close(x * Real(3, 200), Real(1, 200), 1e-50));
  CHECK(!relative_close(Real(1, 64), Real(2, 64), 0.1));
  CHECK(relative_close(Real(64), Real(64), 0.0));
}

TEST_CASE("montgomery arithmetic and prime search") {
  const auto primes = primes_one_mod(30, 3);
  REQUIRE(primes.size() == 3);
  for (auto p : primes) {
    CHECK(p % 30 == 1);
    CHECK(p < (std::uint64_t{1} << 62));
    CHECK(is_prime_u64(p));
    const Montgomery M(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      const std::uint64_t a = rng() % p, b = rng() % p;
      const auto expect = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
      CHECK(M.from_mont(M.mul(M.to_mont(a), M.to_mont(b))) == expect);
    }
    const std::uint64_t w = root_of_unity(p, 30);
    const std::uint64_t wm = M.to_mont(w);
    CHECK(M.pow(wm, 30) == M.one());
    CHECK(M.pow(wm, 15) != M.one());
    CHECK(M.pow(wm, 10) != M.one());
    CHECK(M.pow(wm, 6) != M.one());
  }
  CHECK(!is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime_u64(1000000007ULL));
}

TEST_CASE("crt reconstruction") {
  const auto primes = primes_one_mod(7, 3);
  BigInt x("123456789012345678901234567890123456789");
  std::vector<std::uint64_t> res;
  for (auto p : primes) {
    BigInt r = x % BigInt(static_cast<unsigned long>(p));
    res.push_back(r.get_ui());
  }
  CHECK(crt(res, primes) == x);
}

TEST_CASE("parallel_map keeps index order and rethrows the first failure") {
  set_thread_count(4);
  auto v = parallel_map(100, [](size_t i) { return static_cast<long>(i * i); });
  for (size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<long>(i * i));
  CHECK_THROWS_WITH(parallel_map(50,
                                 [](size_t i) -> int {
                                   if (i == 7 || i == 30) throw std::runtime_error("boom " + std::to_string(i));
                                   return 0;
                                 }),
                    "boom 7");
  set_thread_count(1);
}
