#pragma once

#include <cstdint>
#include <vector>

#include "thetakit/cyclotomic.hpp"
#include "thetakit/rational.hpp"
#include "thetakit/real.hpp"

namespace thetakit {

/// Genus g >= 1, rank r >= 1, level k >= 0.
struct VerlindeQuery {
  long g;
  long r;
  long k;

  long n() const { return r + k; }
  /// Throws HypothesisError when out of range.
  void validate() const;
};

/// An r-subset of {1, ..., n}, members strictly increasing.
struct SubsetS {
  long n;
  std::vector<long> members;

  void validate() const;
};

/// prod over unordered pairs {s,t} of S of (2 - z^(s-t) - z^(t-s))^(1-g), z = zeta_n.
CycNum subset_term(const SubsetS& S, long g);

enum class Engine {
  Automatic,   // memoized; picks one of the below by size
  Cyclotomic,  // necklace-reduced exact sum in Q(zeta_n)
  Modular,     // residues at p-adic roots of unity, recombined by CRT
};

Rational v_number(const VerlindeQuery& q, Engine engine = Engine::Automatic);
Rational v_number_cyclotomic(const VerlindeQuery& q);
Rational v_number_modular(const VerlindeQuery& q);

/// Floating evaluation of the same sum with the given mantissa width.
/// Large instances fall back to long double (64-bit mantissa).
Real v_number_float(const VerlindeQuery& q, unsigned bits = kDefaultFloatBits);

/// r^g / (r+k)^g * v, asserted to be a positive integer.
BigInt verlinde_dim(const VerlindeQuery& q, Engine engine = Engine::Automatic);

bool check_level_rank_symmetry(long g, long r, long k, Engine engine = Engine::Automatic);

/// Size limits. The cyclotomic engine is used by Automatic while C(n,r)
/// stays below the subset limit; the modular engine refuses instances whose
/// tree walk would visit more than the leaf limit.
struct VerlindeBudget {
  double cyclotomic_subsets = 2.0e5;
  double modular_leaves = 1.0e11;
};
void set_verlinde_budget(const VerlindeBudget& b);
VerlindeBudget verlinde_budget();

/// Estimated leaf count of the modular walk for q.
double modular_leaf_estimate(const VerlindeQuery& q);
/// The modular engine runs eight primes at a time through an AVX-512 IFMA
/// kernel when the CPU has it. Disabling forces the portable path.
void set_vector_kernel(bool enabled);
bool vector_kernel_active();
/// True when Automatic evaluation of q fits the budget.
bool v_number_feasible(const VerlindeQuery& q);

void clear_verlinde_cache();

/// Bitmask subset helpers shared with the pgl module. Bit i stands for the
/// element i+1 of {1, ..., n}; requires n <= 63.
namespace subsets {
std::uint64_t rotate(std::uint64_t mask, long n, long shift);
/// Smallest rotation of mask and the number of distinct rotations.
std::pair<std::uint64_t, long> canonical_rotation(std::uint64_t mask, long n);
SubsetS to_subset(std::uint64_t mask, long n);
std::uint64_t to_mask(const SubsetS& S);
/// Calls f(mask) for every r-subset of {1..n} in increasing mask order.
template <class F>
void for_each(long n, long r, F&& f) {
  if (r == 0) {
    f(std::uint64_t{0});
    return;
  }
  if (r > n) return;
  std::uint64_t m = (r == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (m < limit) {
    f(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t s = m + c;
    if (s == 0) break;
    m = (((s ^ m) >> 2) / c) | s;
  }
}
/// Multiplicities of the differences: out[d] counts unordered pairs whose
/// cyclic distance min(|s-t|, n-|s-t|) equals d, for 1 <= d <= n/2.
std::vector<long> distance_counts(std::uint64_t mask, long n);
}  // namespace subsets

}  // namespace thetakit
