#include "thetakit/verlinde.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/modular.hpp"
#include "thetakit/parallel.hpp"
#include "gap_walk.hpp"
#include "modular_simd.hpp"

namespace thetakit {

void VerlindeQuery::validate() const {
  if (g < 1) throw HypothesisError("genus must be >= 1 (got " + std::to_string(g) + ")");
  if (r < 1) throw HypothesisError("rank must be >= 1 (got " + std::to_string(r) + ")");
  if (k < 0) throw HypothesisError("level must be >= 0 (got " + std::to_string(k) + ")");
}

void SubsetS::validate() const {
  if (n < 1) throw std::invalid_argument("SubsetS: ambient size must be positive");
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > n) throw std::invalid_argument("SubsetS: member outside {1..n}");
    if (i > 0 && members[i] <= members[i - 1]) throw std::invalid_argument("SubsetS: members must increase");
  }
}

namespace subsets {

std::uint64_t rotate(std::uint64_t mask, long n, long shift) {
  shift %= n;
  if (shift < 0) shift += n;
  if (shift == 0) return mask;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return ((mask << shift) | (mask >> (n - shift))) & full;
}

std::pair<std::uint64_t, long> canonical_rotation(std::uint64_t mask, long n) {
  std::uint64_t best = mask;
  long period = n;
  for (long s = 1; s < n; ++s) {
    const std::uint64_t m = rotate(mask, n, s);
    if (m == mask && period == n) period = s;
    if (m < best) best = m;
  }
  return {best, period};
}

SubsetS to_subset(std::uint64_t mask, long n) {
  SubsetS S{n, {}};
  for (long i = 0; i < n; ++i)
    if (mask >> i & 1) S.members.push_back(i + 1);
  return S;
}

std::uint64_t to_mask(const SubsetS& S) {
  if (S.n > 63) throw BudgetError("bitmask subsets need n <= 63");
  std::uint64_t m = 0;
  for (long s : S.members) m |= std::uint64_t{1} << (s - 1);
  return m;
}

std::vector<long> distance_counts(std::uint64_t mask, long n) {
  std::vector<long> out(static_cast<size_t>(n / 2 + 1), 0);
  std::vector<long> el;
  for (long i = 0; i < n; ++i)
    if (mask >> i & 1) el.push_back(i);
  for (size_t a = 0; a < el.size(); ++a)
    for (size_t b = a + 1; b < el.size(); ++b) {
      const long d = el[b] - el[a];
      ++out[static_cast<size_t>(std::min(d, n - d))];
    }
  return out;
}

}  // namespace subsets

namespace {

// Below this many subsets the automatic choice sums cyclotomic terms directly.
constexpr double kSmallCyclotomic = 2000;

std::mutex g_budget_mutex;
VerlindeBudget g_budget;

std::mutex g_cache_mutex;
std::map<std::tuple<long, long, long>, Rational> g_cache;

// Power of n shared by all engines: n^(r(g-1)) for the direct sum.
Rational prefactor(long n, long r, long g) { return Rational(ipow(BigInt(n), static_cast<unsigned long>(r * (g - 1)))); }

// Product of (inverse) sine squares for a difference-count vector.
CycNum term_from_counts(const std::vector<CycNum>& inv_base, const std::vector<long>& counts, long e, long n) {
  CycNum t(n, Rational(1));
  for (size_t d = 1; d < counts.size(); ++d)
    if (counts[d] != 0 && e != 0) t *= inv_base[d].pow(e * counts[d]);
  return t;
}

// Necklace classes of r-subsets of Z/n grouped by their distance vectors,
// each with the total number of subsets it stands for.
std::vector<std::pair<std::vector<long>, BigInt>> necklace_classes(long n, long r) {
  std::map<std::vector<long>, BigInt> classes;
  subsets::for_each(n, r, [&](std::uint64_t mask) {
    const auto [canon, period] = subsets::canonical_rotation(mask, n);
    if (canon != mask) return;
    classes[subsets::distance_counts(mask, n)] += period;
  });
  return {classes.begin(), classes.end()};
}

// Sum of prod_{pairs in T} w(t - t') over the gap representatives of the
// m-subsets T of Z/n (see gap_walk.hpp), for any commutative arithmetic A.
// pot[x] carries the product of w(x - t) over the members t chosen so far.
template <class A>
struct GapWalk {
  using V = typename A::value;
  const A& ar;
  long n;
  const std::vector<V>& w;    // w[d], 1 <= d < n
  const std::vector<V>& inv;  // inv[c] = 1/c
  std::vector<std::vector<V>> pots;

  V last(int d, long x, long mx, long cnt) const {
    const auto& pot = pots[static_cast<size_t>(d)];
    const long hi = gapwalk::last_bound(n, x, mx);
    auto s = ar.zero();
    for (long e = x + 1; e < hi; ++e) s = ar.add(s, pot[static_cast<size_t>(e)]);
    if (hi > x) {
      const long c = gapwalk::last_ties(n, x, mx, cnt, hi);
      const V v = pot[static_cast<size_t>(hi)];
      s = ar.add(s, c > 1 ? ar.mul(v, inv[static_cast<size_t>(c)]) : v);
    }
    return s;
  }

  V node(int q, int d, long x, long mx, long cnt) {
    if (q == 0) return ar.one();
    if (q == 1) return last(d, x, mx, cnt);
    const auto& pot = pots[static_cast<size_t>(d)];
    auto& next = pots[static_cast<size_t>(d + 1)];
    auto total = ar.zero();
    for (long y = x + 1;; ++y) {
      const auto st = gapwalk::step(n, q, x, mx, cnt, y);
      if (!gapwalk::viable(st, q, y)) break;
      for (long u = y + 1; u <= st.emax; ++u)
        next[static_cast<size_t>(u)] = ar.mul(pot[static_cast<size_t>(u)], w[static_cast<size_t>(u - y)]);
      total = ar.add(total, ar.mul(pot[static_cast<size_t>(y)], node(q - 1, d + 1, y, st.mx, st.cnt)));
    }
    return total;
  }
};

// n times the gap-representative sum is the sum over all m-subsets.
template <class A>
typename A::value subset_sum(const A& ar, long n, long m, const std::vector<typename A::value>& w) {
  using V = typename A::value;
  if (m == 0) return ar.one();
  std::vector<V> inv(static_cast<size_t>(m + 1), ar.one());
  for (long c = 2; c <= m; ++c) inv[static_cast<size_t>(c)] = ar.inverse(c);
  if (m == 1) return ar.mul(ar.from_long(n), ar.one());
  if (m == 2) {
    // the second member is already the last one, so the tie weight applies here
    const long hi = gapwalk::last_bound(n, 0, 0);
    auto s = ar.zero();
    for (long y = 1; y < hi; ++y) s = ar.add(s, w[static_cast<size_t>(y)]);
    const long c = gapwalk::last_ties(n, 0, 0, 0, hi);
    s = ar.add(s, ar.mul(w[static_cast<size_t>(hi)], inv[static_cast<size_t>(c)]));
    return ar.mul(s, ar.from_long(n));
  }
  // one task per second member; fold in index order
  auto parts = parallel_map(static_cast<size_t>(n - 1), [&](size_t i) {
    const long y = static_cast<long>(i) + 1;
    const auto st = gapwalk::step(n, m - 1, 0, 0, 0, y);
    if (!gapwalk::viable(st, m - 1, y)) return ar.zero();
    GapWalk<A> walk{ar, n, w, inv, std::vector<std::vector<V>>(static_cast<size_t>(m), std::vector<V>(static_cast<size_t>(n), ar.zero()))};
    auto& pot = walk.pots[0];
    for (long u = y + 1; u <= st.emax; ++u) pot[static_cast<size_t>(u)] = ar.mul(w[static_cast<size_t>(u)], w[static_cast<size_t>(u - y)]);
    return ar.mul(w[static_cast<size_t>(y)], walk.node(static_cast<int>(m - 2), 0, y, st.mx, st.cnt));
  });
  auto total = ar.zero();
  for (const auto& p : parts) total = ar.add(total, p);
  return ar.mul(total, ar.from_long(n));
}

struct ModArith {
  using value = std::uint64_t;
  const Montgomery& M;
  value zero() const { return 0; }
  value one() const { return M.one(); }
  value add(value a, value b) const { return M.add(a, b); }
  value mul(value a, value b) const { return M.mul(a, b); }
  value from_long(long x) const { return M.to_mont(static_cast<std::uint64_t>(x)); }
  value inverse(long c) const { return M.inv(from_long(c)); }
};

struct LongDoubleArith {
  using value = long double;
  value zero() const { return 0; }
  value one() const { return 1; }
  value add(value a, value b) const { return a + b; }
  value mul(value a, value b) const { return a * b; }
  value from_long(long x) const { return static_cast<value>(x); }
  value inverse(long c) const { return 1.0L / static_cast<value>(c); }
};

long small_side(const VerlindeQuery& q) { return std::min(q.r, q.k); }

// v mod p through the smaller side: v = n^(m e) sum_T prod w.
std::uint64_t modular_residue(long n, long m, long e, std::uint64_t p) {
  const Montgomery M(p);
  const std::uint64_t z = M.to_mont(root_of_unity(p, static_cast<std::uint64_t>(n)));
  std::vector<std::uint64_t> zp(static_cast<size_t>(n));
  zp[0] = M.one();
  for (long j = 1; j < n; ++j) zp[static_cast<size_t>(j)] = M.mul(zp[static_cast<size_t>(j - 1)], z);
  const std::uint64_t two = M.to_mont(2);
  std::vector<std::uint64_t> w(static_cast<size_t>(n), 0);
  for (long d = 1; d < n; ++d) {
    const std::uint64_t base = M.sub(M.sub(two, zp[static_cast<size_t>(d)]), zp[static_cast<size_t>(n - d)]);
    w[static_cast<size_t>(d)] = M.pow(M.inv(base), static_cast<std::uint64_t>(e));
  }
  const ModArith ar{M};
  std::uint64_t s = subset_sum(ar, n, m, w);
  s = M.mul(s, M.pow(M.to_mont(static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(m * e)));
  return M.from_mont(s);
}

long double long_double_value(long n, long m, long e) {
  std::vector<long double> w(static_cast<size_t>(n), 0);
  const long double pi = 3.141592653589793238462643383279502884L;
  for (long d = 1; d < n; ++d) {
    const long double s = 2 * std::sin(pi * d / n);
    w[static_cast<size_t>(d)] = std::pow(s * s, -static_cast<long double>(e));
  }
  const LongDoubleArith ar;
  return subset_sum(ar, n, m, w) * std::pow(static_cast<long double>(n), static_cast<long double>(m * e));
}

BigInt value_bound(long double approx) {
  BigInt bound;
  mpz_set_d(bound.get_mpz_t(), std::ceil(static_cast<double>(approx) * 2.0 + 16.0));
  return bound;
}

size_t bound_bits(long double approx) {
  const BigInt b = value_bound(approx);
  return mpz_sizeinbase(b.get_mpz_t(), 2);
}

std::atomic<bool> g_vector_kernel{true};

// Eight primes per pass through the vector kernel, as many passes as the
// floating estimate from the first pass asks for. False when the kernel is
// unavailable or the estimate is unusable.
bool vector_pass(long n, long m, long e, std::vector<std::uint64_t>& primes, std::vector<std::uint64_t>& residues,
                 long double& approx) {
#ifdef THETAKIT_HAVE_IFMA
  if (!g_vector_kernel || !simd::available() || m < 3 || n > simd::kMaxN) return false;
  constexpr size_t L = simd::kLanes;
  const long double pi = 3.141592653589793238462643383279502884L;
  std::vector<double> wf(static_cast<size_t>(n), 0.0), invf(static_cast<size_t>(m + 1), 0.0);
  for (long d = 1; d < n; ++d) {
    const long double s = 2 * std::sin(pi * d / n);
    wf[static_cast<size_t>(d)] = static_cast<double>(std::pow(s * s, -static_cast<long double>(e)));
  }
  for (long c = 1; c <= m; ++c) invf[static_cast<size_t>(c)] = 1.0 / static_cast<double>(c);
  const auto run = [&](const std::uint64_t* lane_primes, std::uint64_t* out) {
    std::vector<std::uint64_t> w(static_cast<size_t>(n) * L, 0), inv(static_cast<size_t>(m + 1) * L, 0);
    std::vector<std::uint64_t> scale(L);
    for (size_t l = 0; l < L; ++l) {
      const std::uint64_t p = lane_primes[l];
      const Montgomery M(p);
      const std::uint64_t z = M.to_mont(root_of_unity(p, static_cast<std::uint64_t>(n)));
      std::uint64_t zd = M.one();
      for (long d = 1; d < n; ++d) {
        zd = M.mul(zd, z);
        const std::uint64_t zi = M.pow(zd, static_cast<std::uint64_t>(n - 1));
        const std::uint64_t base = M.sub(M.sub(M.to_mont(2), zd), zi);
        w[static_cast<size_t>(d) * L + l] = M.from_mont(M.pow(M.inv(base), static_cast<std::uint64_t>(e)));
      }
      for (long c = 1; c <= m; ++c) inv[static_cast<size_t>(c) * L + l] = M.from_mont(M.inv(M.to_mont(static_cast<std::uint64_t>(c))));
      scale[l] = M.pow(M.to_mont(static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(m * e + 1));
    }
    const simd::Table t{n, m, lane_primes, w.data(), wf.data(), inv.data(), invf.data()};
    auto parts = parallel_map(static_cast<size_t>(n - 1), [&](size_t i) { return simd::branch(t, static_cast<long>(i) + 1); });
    long double est = 0;
    for (size_t l = 0; l < L; ++l) {
      const Montgomery M(lane_primes[l]);
      std::uint64_t acc = 0;
      for (const auto& p : parts) acc = M.add(acc, p.residues[l]);
      out[l] = M.from_mont(M.mul(M.to_mont(acc), scale[l]));
    }
    for (const auto& p : parts) est += p.approx;
    return est * std::pow(static_cast<long double>(n), static_cast<long double>(m * e + 1));
  };
  primes = primes_one_mod(static_cast<std::uint64_t>(n), L, simd::kPrimeLimit);
  residues.assign(L, 0);
  approx = run(primes.data(), residues.data());
  if (!std::isfinite(approx) || !(approx > 0)) return false;
  const size_t lanes_needed = bound_bits(approx) / 46 + 1;
  const size_t passes = (lanes_needed + L - 1) / L;
  if (passes > 1) {
    primes = primes_one_mod(static_cast<std::uint64_t>(n), passes * L, simd::kPrimeLimit);
    residues.resize(passes * L);
    for (size_t b = 1; b < passes; ++b) run(primes.data() + b * L, residues.data() + b * L);
  }
  return true;
#else
  (void)n, (void)m, (void)e, (void)primes, (void)residues, (void)approx;
  return false;
#endif
}

}  // namespace

CycNum subset_term(const SubsetS& S, long g) {
  S.validate();
  if (g < 1) throw HypothesisError("genus must be >= 1");
  const long n = S.n;
  std::map<long, long> counts;
  for (size_t a = 0; a < S.members.size(); ++a)
    for (size_t b = a + 1; b < S.members.size(); ++b) ++counts[S.members[b] - S.members[a]];
  CycNum t(n, Rational(1));
  if (g == 1) return t;
  for (const auto& [d, c] : counts) t *= CycNum::sine_square(n, d).pow((1 - g) * c);
  return t;
}

void set_verlinde_budget(const VerlindeBudget& b) {
  std::lock_guard lock(g_budget_mutex);
  g_budget = b;
}

VerlindeBudget verlinde_budget() {
  std::lock_guard lock(g_budget_mutex);
  return g_budget;
}

double modular_leaf_estimate(const VerlindeQuery& q) {
  const long m = small_side(q);
  if (m <= 1) return 1.0;
  // about one representative per rotation class
  return binomial(q.n() - 1, m - 1).get_d() / static_cast<double>(m);
}

void set_vector_kernel(bool enabled) { g_vector_kernel = enabled; }

bool vector_kernel_active() {
#ifdef THETAKIT_HAVE_IFMA
  return g_vector_kernel && simd::available();
#else
  return false;
#endif
}

bool v_number_feasible(const VerlindeQuery& q) {
  q.validate();
  if (q.g == 1) return true;
  const auto b = verlinde_budget();
  if (q.n() <= 63 && binomial(q.n(), q.r).get_d() <= b.cyclotomic_subsets) return true;
  return modular_leaf_estimate(q) <= b.modular_leaves;
}

Rational v_number_cyclotomic(const VerlindeQuery& q) {
  q.validate();
  const long n = q.n(), e = q.g - 1;
  if (n > 63) throw BudgetError("cyclotomic engine needs r + k <= 63");
  const double count = binomial(n, q.r).get_d();
  if (count > verlinde_budget().cyclotomic_subsets)
    throw BudgetError("cyclotomic engine: C(" + std::to_string(n) + "," + std::to_string(q.r) +
                      ") subsets exceed the budget");
  const auto classes = necklace_classes(n, q.r);
  std::vector<CycNum> inv_base(static_cast<size_t>(n / 2 + 1), CycNum(n));
  if (e != 0)
    for (long d = 1; d <= n / 2; ++d) inv_base[static_cast<size_t>(d)] = CycNum::sine_square(n, d).inverse();
  auto terms = parallel_map(classes.size(), [&](size_t i) {
    return term_from_counts(inv_base, classes[i].first, e, n) * Rational(classes[i].second);
  });
  CycNum total(n);
  for (const auto& t : terms) total += t;
  return prefactor(n, q.r, q.g) * extract_rational(total);
}

Rational v_number_modular(const VerlindeQuery& q) {
  q.validate();
  const long n = q.n(), m = small_side(q), e = q.g - 1;
  if (modular_leaf_estimate(q) > verlinde_budget().modular_leaves)
    throw BudgetError("modular engine: about " + std::to_string(modular_leaf_estimate(q)) +
                      " leaves for v_" + std::to_string(q.g) + "(" + std::to_string(q.r) + "," +
                      std::to_string(q.k) + ") exceed the budget");
  if (n == 1) return Rational(1);
  std::vector<std::uint64_t> primes, residues;
  long double approx = 0;
  if (!vector_pass(n, m, e, primes, residues, approx)) {
    // Every summand is positive, so the long double pass bounds v within a
    // relative error far below 1/2.
    approx = long_double_value(n, m, e);
    primes = primes_one_mod(static_cast<std::uint64_t>(n), bound_bits(approx) / 61 + 1);
    residues.clear();
    for (auto p : primes) residues.push_back(modular_residue(n, m, e, p));
  }
  const BigInt bound = value_bound(approx);
  const BigInt v = crt(residues, primes);
  if (v > bound) throw ConsistencyError("modular engine: reconstructed value exceeds its bound");
  const double rel = std::fabs(v.get_d() - static_cast<double>(approx)) / v.get_d();
  if (!(rel < 1e-6))
    throw ConsistencyError("modular engine: exact and floating values disagree (relative " +
                           std::to_string(rel) + ")");
  return Rational(v);
}

Real v_number_float(const VerlindeQuery& q, unsigned bits) {
  q.validate();
  const long n = q.n(), e = q.g - 1;
  if (n > 63 || binomial(n, q.r).get_d() > verlinde_budget().cyclotomic_subsets) {
    if (modular_leaf_estimate(q) > verlinde_budget().modular_leaves)
      throw BudgetError("float evaluation exceeds the budget");
    const long double v = long_double_value(n, small_side(q), e);
    mpfr_t tmp;
    mpfr_init2(tmp, 64);
    mpfr_set_ld(tmp, v, MPFR_RNDN);
    Real out(64);
    mpfr_set(out.get(), tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return out;
  }
  const auto classes = necklace_classes(n, q.r);
  const Real pi = Real::pi(bits);
  std::vector<Real> base(static_cast<size_t>(n / 2 + 1), Real(bits));
  for (long d = 1; d <= n / 2; ++d) {
    const Real s = (pi * Real(d, bits) / Real(n, bits)).sin() * Real(2, bits);
    base[static_cast<size_t>(d)] = s * s;
  }
  auto terms = parallel_map(classes.size(), [&](size_t i) {
    Real t(Rational(classes[i].second), bits);
    const auto& c = classes[i].first;
    for (size_t d = 1; d < c.size(); ++d)
      if (c[d] != 0 && e != 0) t *= base[d].pow(-e * c[d]);
    return t;
  });
  Real total(bits);
  for (const auto& t : terms) total += t;
  return total * Real(prefactor(n, q.r, q.g), bits);
}

Rational v_number(const VerlindeQuery& q, Engine engine) {
  q.validate();
  switch (engine) {
    case Engine::Cyclotomic:
      return v_number_cyclotomic(q);
    case Engine::Modular:
      return v_number_modular(q);
    case Engine::Automatic:
      break;
  }
  const auto key = std::make_tuple(q.g, q.r, q.k);
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  Rational v;
  if (q.g == 1) {
    v = Rational(binomial(q.n(), q.r));
  } else {
    // the cyclotomic sum only wins on tiny inputs; past that the modular
    // walk is orders of magnitude cheaper
    const double subsets = binomial(q.n(), q.r).get_d();
    const bool cyc_ok = q.n() <= 63 && subsets <= verlinde_budget().cyclotomic_subsets;
    const bool mod_ok = modular_leaf_estimate(q) <= verlinde_budget().modular_leaves;
    v = cyc_ok && (subsets <= kSmallCyclotomic || !mod_ok) ? v_number_cyclotomic(q) : v_number_modular(q);
  }
  std::lock_guard lock(g_cache_mutex);
  g_cache.emplace(key, v);
  return v;
}

BigInt verlinde_dim(const VerlindeQuery& q, Engine engine) {
  const Rational v = v_number(q, engine);
  const Rational dim = v * Rational(ipow(BigInt(q.r), static_cast<unsigned long>(q.g)),
                                    ipow(BigInt(q.n()), static_cast<unsigned long>(q.g)));
  if (!dim.is_integer() || dim.sign() <= 0)
    throw ConsistencyError("verlinde_dim(g=" + std::to_string(q.g) + ", r=" + std::to_string(q.r) +
                           ", k=" + std::to_string(q.k) + ") = " + dim.to_string() +
                           " is not a positive integer");
  return dim.numerator();
}

bool check_level_rank_symmetry(long g, long r, long k, Engine engine) {
  if (r < 1 || k < 1) throw HypothesisError("level-rank symmetry needs r, k >= 1");
  return v_number({g, r, k}, engine) == v_number({g, k, r}, engine);
}

void clear_verlinde_cache() {
  std::lock_guard lock(g_cache_mutex);
  g_cache.clear();
}

#ifdef THETAKIT_HAVE_IFMA
bool simd::available() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512dq") &&
         __builtin_cpu_supports("avx512ifma");
}
#endif

}  // namespace thetakit
