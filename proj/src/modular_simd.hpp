#pragma once

// Eight-prime vector kernel for the modular Verlinde engine (AVX-512 IFMA).
// The interface uses plain pointers only, so nothing with external linkage
// is shared with the translation unit built for the wider instruction set.

#include <cstdint>

namespace thetakit::simd {

constexpr int kLanes = 8;
constexpr long kMaxN = 128;
/// Lane moduli stay below this so that lazy products and sums fit the
/// 52-bit multiplier inputs.
constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 47;

struct Table {
  long n;
  long m;                       // subset size, >= 3
  const std::uint64_t* primes;  // kLanes odd primes below kPrimeLimit
  const std::uint64_t* w;       // w[d * kLanes + lane], plain residues, 1 <= d < n
  const double* wf;             // w[d] in floating point
  const std::uint64_t* inv;     // inv[c * kLanes + lane] = 1/c mod p, 1 <= c <= m
  const double* invf;
};

struct Partial {
  std::uint64_t residues[kLanes];  // plain residues
  double approx;
};

/// True when the running CPU has the instructions the kernel needs.
bool available();

/// Contribution of the gap representatives whose second member is y,
/// without the overall factor n.
Partial branch(const Table& t, long y);

}  // namespace thetakit::simd
