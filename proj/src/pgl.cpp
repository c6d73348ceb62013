#include "thetakit/pgl.hpp"

#include <algorithm>
#include <numeric>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/parallel.hpp"
#include "thetakit/torsion.hpp"

namespace thetakit {

void PglQuery::validate() const {
  if (g < 1) throw HypothesisError("genus must be >= 1");
  if (r < 1 || k < 0) throw HypothesisError("need r >= 1 and k >= 0");
  if (r % 2 == 0) throw HypothesisError("r must be odd for the quotient SL_r / Z_d (got r = " + std::to_string(r) + ")");
  if (d < 1 || r % d != 0 || k % d != 0)
    throw HypothesisError("d must divide both r and k (got d = " + std::to_string(d) + ", r = " +
                          std::to_string(r) + ", k = " + std::to_string(k) + ")");
}

long coperiod(const SubsetS& S, long r, long k) {
  S.validate();
  if (static_cast<long>(S.members.size()) != r || S.n != r + k)
    throw std::invalid_argument("coperiod: S must be an r-subset of {1..r+k}");
  const long n = S.n;
  auto ds = divisors(std::gcd(r, k));
  std::reverse(ds.begin(), ds.end());
  for (long delta : ds) {
    const long block = n / delta;
    std::vector<long> base;
    for (long s : S.members)
      if (s <= block) base.push_back(s);
    if (static_cast<long>(base.size()) != r / delta) continue;
    std::vector<long> un;
    for (long i = 0; i < delta; ++i)
      for (long s : base) un.push_back(s + i * block);
    std::sort(un.begin(), un.end());
    if (un == S.members) return delta;
  }
  return 1;
}

Rational xi_weight(const SubsetS& S, long d, long r, long k, long g) {
  if (d < 1 || r % d != 0 || k % d != 0) throw HypothesisError("d must divide gcd(r, k)");
  const long cop = coperiod(S, r, k);
  const Rational direct = Rational(std::gcd(cop, d), d).pow(2 * g);
  BigInt count = 0;
  for (long delta : divisors(d))
    if (cop % delta == 0) count += count_order(d, delta, g);
  const Rational via_orders = Rational(count) / Rational(ipow(BigInt(d), static_cast<unsigned long>(2 * g)));
  if (direct != via_orders)
    throw ConsistencyError("xi weight: direct form " + direct.to_string() + " differs from order-count form " +
                           via_orders.to_string());
  return direct;
}

// (1/d^{2g}) r^g/(r+k)^g sum_{delta | d} n(delta) v_{delta(g-1)+1}(r/delta, k/delta)
Rational pgl_dim_charsum(const PglQuery& q) {
  q.validate();
  Rational sum(0);
  for (long delta : divisors(q.d))
    sum += Rational(count_order(q.d, delta, q.g)) * v_number({delta * (q.g - 1) + 1, q.r / delta, q.k / delta});
  const Rational scale(ipow(BigInt(q.r), static_cast<unsigned long>(q.g)),
                       ipow(BigInt(q.r + q.k), static_cast<unsigned long>(q.g)) *
                           ipow(BigInt(q.d), static_cast<unsigned long>(2 * q.g)));
  const Rational dim = scale * sum;
  if (!dim.is_integer() || dim.sign() < 0)
    throw ConsistencyError("character-average dimension " + dim.to_string() + " is not a non-negative integer");
  return dim;
}

// r^g (r+k)^{(r-1)(g-1)-1} sum_S xi_d(S) term(S)
Rational pgl_dim_coperiodic(const PglQuery& q) {
  q.validate();
  const long n = q.r + q.k;
  if (n > 63) throw BudgetError("coperiodic route needs r + k <= 63");
  if (binomial(n, q.r).get_d() > verlinde_budget().cyclotomic_subsets)
    throw BudgetError("coperiodic route: too many subsets");
  std::vector<std::uint64_t> masks;
  subsets::for_each(n, q.r, [&](std::uint64_t m) { masks.push_back(m); });
  auto terms = parallel_map(masks.size(), [&](size_t i) {
    const SubsetS S = subsets::to_subset(masks[i], n);
    return subset_term(S, q.g) * xi_weight(S, q.d, q.r, q.k, q.g);
  });
  CycNum total(n);
  for (const auto& t : terms) total += t;
  const long e = (q.r - 1) * (q.g - 1) - 1;
  Rational pre(ipow(BigInt(q.r), static_cast<unsigned long>(q.g)));
  pre *= Rational(n).pow(e);
  return pre * extract_rational(total);
}

bool check_sine_identity(long delta, const Rational& x_over_pi) {
  if (delta < 1) throw HypothesisError("delta must be >= 1");
  // angle theta = pi * j / L gives 4 sin^2(theta) = 2 - zeta_L^j - zeta_L^-j
  const BigInt Lz = lcm(x_over_pi.denominator(), BigInt(delta));
  if (!Lz.fits_slong_p()) throw BudgetError("conductor too large");
  const long L = Lz.get_si();
  auto index = [&](const Rational& t) {
    const Rational j = t * Rational(L);
    BigInt v = j.to_integer() % L;
    if (v < 0) v += L;
    return v.get_si();
  };
  const long rhs_index = index(x_over_pi * Rational(delta));
  if (rhs_index == 0) throw HypothesisError("degenerate angle: delta * x is a multiple of pi");
  CycNum lhs(L, Rational(1));
  for (long i = 0; i < delta; ++i) lhs *= CycNum::sine_square(L, index(x_over_pi + Rational(i, delta)));
  return lhs == CycNum::sine_square(L, rhs_index);
}

bool check_coperiodic_product(const SubsetS& S, long r, long k, long delta) {
  const long n = r + k;
  if (delta < 1 || r % delta != 0 || n % delta != 0) throw HypothesisError("delta must divide r and k");
  if (coperiod(S, r, k) % delta != 0) throw HypothesisError("S is not delta-coperiodic");
  const long block = n / delta;
  std::vector<long> base;
  for (long s : S.members)
    if (s <= block) base.push_back(s);
  CycNum lhs(n, Rational(1));
  for (size_t a = 0; a < S.members.size(); ++a)
    for (size_t b = a + 1; b < S.members.size(); ++b) lhs *= CycNum::sine_square(n, S.members[b] - S.members[a]);
  CycNum inner(n, Rational(1));
  for (size_t a = 0; a < base.size(); ++a)
    for (size_t b = a + 1; b < base.size(); ++b) inner *= CycNum::sine_square(n, delta * (base[b] - base[a]));
  const CycNum rhs = inner.pow(delta) * Rational(ipow(BigInt(delta), static_cast<unsigned long>(r)));
  return lhs == rhs;
}

}  // namespace thetakit
