#pragma once

#include <cstdint>
#include <vector>

#include "thetakit/rational.hpp"

namespace thetakit {

/// Montgomery arithmetic modulo an odd prime p < 2^62.
/// Residues stay in Montgomery form between to_mont and from_mont.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

  std::uint64_t to_mont(std::uint64_t a) const { return mul(a % p_, r2_); }
  std::uint64_t from_mont(std::uint64_t a) const { return reduce(a); }
  std::uint64_t one() const { return one_; }

  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  /// Inverse by Fermat; base must be nonzero.
  std::uint64_t inv(std::uint64_t base) const { return pow(base, p_ - 2); }

 private:
  std::uint64_t reduce(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * nprime_;
    const unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    const auto r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t nprime_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;      // 2^128 mod p
  std::uint64_t one_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The first `count` primes p < limit with p = 1 mod n, scanning downward.
std::vector<std::uint64_t> primes_one_mod(std::uint64_t n, std::size_t count,
                                          std::uint64_t limit = std::uint64_t{1} << 62);

/// An element of exact multiplicative order n modulo the prime p (n | p-1).
std::uint64_t root_of_unity(std::uint64_t p, std::uint64_t n);

/// The unique x in [0, prod p) with x = residues[i] mod primes[i].
BigInt crt(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& primes);

}  // namespace thetakit
