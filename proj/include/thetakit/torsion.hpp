#pragma once

#include <vector>

#include "thetakit/cyclotomic.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

/// A point of (Z/h)^{2g}, standing in for the h-torsion of a g-dimensional
/// principally polarized abelian variety.
struct TorsionPoint {
  long h;
  std::vector<long> coords;

  long genus() const { return static_cast<long>(coords.size()) / 2; }
  /// h / gcd(h, coords...).
  long order() const;
};

/// A character xi(alpha) = zeta_h^<xi, alpha> with the dot-product pairing.
struct CharacterLabel {
  long h;
  std::vector<long> coords;

  long order() const;
  /// <xi, alpha> mod h, in [0, h).
  long pair(const TorsionPoint& alpha) const;
};

struct SymbolQuery {
  long lambda;
  long h;
  long g;
};

/// The genus-g totient symbol {lambda / h}_g.
Rational totient_symbol(const SymbolQuery& q);

/// Number of points of exact order delta in (Z/h)^{2g}; independent of h.
BigInt count_order(long h, long delta, long g);
/// The same count by enumerating (Z/h)^{2g}.
BigInt count_order_brute(long h, long delta, long g);

/// sum_{delta | m} count_order(delta) == m^{2g}.
bool check_count_partition(long m, long g);

/// Calls f(point) for every point of (Z/h)^{2g} in lexicographic order.
template <class F>
void for_each_point(long h, long g, F&& f) {
  TorsionPoint p{h, std::vector<long>(static_cast<size_t>(2 * g), 0)};
  for (;;) {
    f(static_cast<const TorsionPoint&>(p));
    size_t i = 0;
    while (i < p.coords.size() && ++p.coords[i] == h) p.coords[i++] = 0;
    if (i == p.coords.size()) return;
  }
}

/// sum of xi(alpha^{-1}) over alpha of exact order h/delta, by enumeration.
CycNum character_order_sum_brute(const CharacterLabel& xi, long delta);
/// (h^{2g} / delta^{2g}) {(h/omega) / (h/delta)}_g.
Rational character_order_sum_closed(long h, long omega, long delta, long g);
/// The brute-force sum, made rational and checked against the closed form.
/// Throws ConsistencyError when the two disagree.
Rational character_order_sum(const CharacterLabel& xi, long delta);

/// Up to `count` distinct characters of (Z/h)^{2g} of exact order omega:
/// the lexicographically first and last, then the ones after the first.
std::vector<CharacterLabel> sample_characters(long h, long omega, long g, std::size_t count);

}  // namespace thetakit
