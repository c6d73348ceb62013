#include "thetakit/torsion.hpp"

#include <numeric>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

long tuple_order(long h, const std::vector<long>& coords) {
  long g = h;
  for (long c : coords) g = std::gcd(g, ((c % h) + h) % h);
  return h / g;
}

void require_modulus(long h) {
  if (h < 1) throw HypothesisError("modulus h must be >= 1");
}

void require_divisor(long delta, long h) {
  if (delta < 1 || h % delta != 0)
    throw HypothesisError(std::to_string(delta) + " does not divide " + std::to_string(h));
}

}  // namespace

long TorsionPoint::order() const {
  require_modulus(h);
  return tuple_order(h, coords);
}

long CharacterLabel::order() const {
  require_modulus(h);
  return tuple_order(h, coords);
}

long CharacterLabel::pair(const TorsionPoint& alpha) const {
  if (alpha.h != h || alpha.coords.size() != coords.size())
    throw std::invalid_argument("character and point live on different groups");
  long s = 0;
  for (size_t i = 0; i < coords.size(); ++i) s = (s + coords[i] * alpha.coords[i]) % h;
  return (s + h) % h;
}

Rational totient_symbol(const SymbolQuery& q) {
  require_modulus(q.h);
  if (q.g < 1) throw HypothesisError("genus must be >= 1");
  if (q.lambda < 0) throw HypothesisError("symbol numerator must be >= 0");
  if (q.h == 1) return Rational(1);
  Rational out(1);
  for (const auto& [p, a] : factorize(q.h)) {
    const BigInt below = ipow(BigInt(p), static_cast<unsigned long>(a - 1));
    if (BigInt(q.lambda) % below != 0) return Rational(0);
    const bool full = BigInt(q.lambda) % (below * p) == 0;
    const Rational tail = Rational(BigInt(1), ipow(BigInt(p), static_cast<unsigned long>(2 * q.g)));
    out *= (full ? Rational(1) : Rational(0)) - tail;
  }
  return out;
}

BigInt count_order(long h, long delta, long g) {
  require_modulus(h);
  require_divisor(delta, h);
  const auto e = static_cast<unsigned long>(2 * g);
  Rational n(ipow(BigInt(delta), e));
  for (const auto& [p, a] : factorize(delta)) n *= Rational(1) - Rational(BigInt(1), ipow(BigInt(p), e));
  return n.to_integer();
}

BigInt count_order_brute(long h, long delta, long g) {
  require_modulus(h);
  require_divisor(delta, h);
  BigInt c = 0;
  for_each_point(h, g, [&](const TorsionPoint& p) {
    if (p.order() == delta) ++c;
  });
  return c;
}

bool check_count_partition(long m, long g) {
  BigInt total = 0;
  for (long d : divisors(m)) total += count_order(m, d, g);
  return total == ipow(BigInt(m), static_cast<unsigned long>(2 * g));
}

CycNum character_order_sum_brute(const CharacterLabel& xi, long delta) {
  const long h = xi.h;
  require_modulus(h);
  require_divisor(delta, h);
  if (xi.coords.size() % 2 != 0) throw std::invalid_argument("character needs 2g coordinates");
  const long g = static_cast<long>(xi.coords.size()) / 2;
  std::vector<BigInt> counts(static_cast<size_t>(h), 0);
  for_each_point(h, g, [&](const TorsionPoint& a) {
    if (a.order() == h / delta) ++counts[static_cast<size_t>((h - xi.pair(a)) % h)];
  });
  return CycNum::from_power_counts(h, counts);
}

Rational character_order_sum_closed(long h, long omega, long delta, long g) {
  require_divisor(omega, h);
  require_divisor(delta, h);
  const Rational scale(ipow(BigInt(h / delta), static_cast<unsigned long>(2 * g)));
  return scale * totient_symbol({h / omega, h / delta, g});
}

Rational character_order_sum(const CharacterLabel& xi, long delta) {
  const Rational brute = extract_rational(character_order_sum_brute(xi, delta));
  const long g = static_cast<long>(xi.coords.size()) / 2;
  const Rational closed = character_order_sum_closed(xi.h, xi.order(), delta, g);
  if (brute != closed)
    throw ConsistencyError("character sum over points of order " + std::to_string(xi.h / delta) +
                           ": enumeration gives " + brute.to_string() + ", closed form gives " +
                           closed.to_string());
  return brute;
}

std::vector<CharacterLabel> sample_characters(long h, long omega, long g, std::size_t count) {
  require_modulus(h);
  require_divisor(omega, h);
  std::vector<CharacterLabel> all;
  for_each_point(h, g, [&](const TorsionPoint& p) {
    if (p.order() == omega) all.push_back({h, p.coords});
  });
  std::vector<CharacterLabel> out;
  if (all.empty() || count == 0) return out;
  out.push_back(all.front());
  if (count > 1 && all.size() > 1) out.push_back(all.back());
  for (size_t i = 1; out.size() < count && i + 1 < all.size(); ++i) out.push_back(all[i]);
  return out;
}

}  // namespace thetakit
