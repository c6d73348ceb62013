#include "thetakit/modular.hpp"

#include <stdexcept>

#include "thetakit/arith.hpp"

namespace thetakit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Montgomery::Montgomery(std::uint64_t p) : p_(p) {
  if (p % 2 == 0 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("Montgomery: need odd p < 2^62");
  // Newton iteration for p^{-1} mod 2^64.
  std::uint64_t inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  nprime_ = ~inv + 1;
  const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
  r2_ = static_cast<std::uint64_t>(r * r % p);
  one_ = static_cast<std::uint64_t>(r);
}

std::uint64_t Montgomery::pow(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t r = one_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_one_mod(std::uint64_t n, std::size_t count, std::uint64_t limit) {
  if (n == 0) throw std::invalid_argument("primes_one_mod: n must be positive");
  if (limit > (std::uint64_t{1} << 62)) throw std::invalid_argument("primes_one_mod: limit above 2^62");
  std::vector<std::uint64_t> out;
  const std::uint64_t step = n % 2 == 0 ? n : 2 * n;  // keep p odd
  std::uint64_t p = (limit - 1) / step * step + 1;
  while (out.size() < count) {
    if (p >= limit) p -= step;
    if (p <= step) throw std::invalid_argument("primes_one_mod: ran out of primes below the limit");
    if (is_prime_u64(p)) out.push_back(p);
    p -= step;
  }
  return out;
}

std::uint64_t root_of_unity(std::uint64_t p, std::uint64_t n) {
  if ((p - 1) % n != 0) throw std::invalid_argument("root_of_unity: n must divide p - 1");
  const auto primes = factorize(static_cast<long>(n));
  for (std::uint64_t g = 2;; ++g) {
    const std::uint64_t x = powmod(g, (p - 1) / n, p);
    bool exact = true;
    for (const auto& [q, e] : primes)
      if (powmod(x, n / static_cast<std::uint64_t>(q), p) == 1) exact = false;
    if (exact) return x;
  }
}

BigInt crt(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& primes) {
  BigInt x = 0, m = 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    const BigInt p(static_cast<unsigned long>(primes[i]));
    const BigInt r(static_cast<unsigned long>(residues[i]));
    // x + m*t = r mod p
    BigInt minv, t;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    t = ((r - x) % p) * minv % p;
    if (t < 0) t += p;
    x += m * t;
    m *= p;
  }
  return x;
}

}  // namespace thetakit
