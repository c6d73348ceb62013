#include "thetakit/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetakit {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_phi(long n) {
  long out = n;
  for (const auto& [p, e] : factorize(n)) out = out / p * (p - 1);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool divides(long d, long n) { return d != 0 && n % d == 0; }

}  // namespace thetakit
