#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "thetakit/rational.hpp"

namespace thetakit {

/// (prime, exponent) pairs in increasing prime order; trial division.
std::vector<std::pair<long, int>> factorize(long n);

/// Positive divisors in increasing order.
std::vector<long> divisors(long n);

long euler_phi(long n);

BigInt binomial(long n, long k);

bool divides(long d, long n);

}  // namespace thetakit
