#include "thetakit/splitting.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"

namespace thetakit {

void SplitQuery::validate_trace() const {
  if (g < 1) throw HypothesisError("genus must be >= 1");
  if (r < 1 || k < 1) throw HypothesisError("rank and level must be >= 1");
  if (h < 1) throw HypothesisError("h must be >= 1");
  if (h % 2 == 0)
    throw HypothesisError("h must be odd: the trace and splitting formulas are stated for odd h only (got h = " +
                          std::to_string(h) + ")");
}

void SplitQuery::validate_multiplicity() const {
  validate_trace();
  if (std::gcd(r, k) != 1)
    throw HypothesisError("gcd(r, k) must be 1 for the splitting formula (got gcd(" + std::to_string(r) + ", " +
                          std::to_string(k) + ") = " + std::to_string(std::gcd(r, k)) + ")");
}

namespace {

std::mutex g_trace_mutex;
std::map<std::tuple<long, long, long, long, long>, Rational> g_trace_cache;

Rational slope_factor(long r, long k, long g) {
  return Rational(ipow(BigInt(r), static_cast<unsigned long>(g)), ipow(BigInt(r + k), static_cast<unsigned long>(g)));
}

void require_divisor(long d, long h, const char* what) {
  if (d < 1 || h % d != 0)
    throw HypothesisError(std::string(what) + " = " + std::to_string(d) + " must divide h = " + std::to_string(h));
}

// Per order of alpha, the number of points alpha of that order with
// <xi, -alpha> = j mod h, for j in [0, h).
std::map<long, std::vector<BigInt>> pairing_histogram(const SplitQuery& q, const CharacterLabel& xi) {
  if (xi.h != q.h || static_cast<long>(xi.coords.size()) != 2 * q.g)
    throw HypothesisError("character must live on (Z/h)^{2g} for the query's h and g");
  std::map<long, std::vector<BigInt>> hist;
  for (long d : divisors(q.h)) hist.emplace(d, std::vector<BigInt>(static_cast<size_t>(q.h), 0));
  for_each_point(q.h, q.g, [&](const TorsionPoint& a) {
    ++hist[a.order()][static_cast<size_t>((q.h - xi.pair(a)) % q.h)];
  });
  return hist;
}

}  // namespace

Rational evaluate(const VForm& form) {
  Rational s(0);
  for (const auto& t : form)
    if (!t.coefficient.is_zero()) s += t.coefficient * v_number(t.v);
  return s;
}

VForm normalize(VForm form) {
  std::map<std::tuple<long, long, long>, Rational> acc;
  for (const auto& t : form) acc[{t.v.g, t.v.r, t.v.k}] += t.coefficient;
  VForm out;
  for (const auto& [key, c] : acc)
    if (!c.is_zero()) out.push_back({c, {std::get<0>(key), std::get<1>(key), std::get<2>(key)}});
  return out;
}

VTerm trace_term(const SplitQuery& q, long delta) {
  q.validate_trace();
  require_divisor(delta, q.h, "order delta");
  return {slope_factor(q.r, q.k, q.g), {(q.g - 1) * delta + 1, q.h * q.r / delta, q.h * q.k / delta}};
}

TraceValue trace_of_torsion(const SplitQuery& q, long delta) {
  const VTerm t = trace_term(q, delta);
  const auto key = std::make_tuple(q.g, q.r, q.k, q.h, delta);
  {
    std::lock_guard lock(g_trace_mutex);
    if (auto it = g_trace_cache.find(key); it != g_trace_cache.end()) return {it->second};
  }
  const Rational value = t.coefficient * v_number(t.v);
  if (value.sign() <= 0) throw ConsistencyError("trace " + value.to_string() + " is not positive");
  std::lock_guard lock(g_trace_mutex);
  g_trace_cache.emplace(key, value);
  return {value};
}

VForm multiplicity_form(const SplitQuery& q, long omega) {
  q.validate_multiplicity();
  require_divisor(omega, q.h, "character order omega");
  VForm form;
  const Rational base = Rational(BigInt(1), ipow(BigInt(q.r + q.k), static_cast<unsigned long>(q.g)));
  for (long delta : divisors(q.h)) {
    const Rational sym = totient_symbol({q.h / omega, q.h / delta, q.g});
    const Rational c = base * sym * Rational(BigInt(1), ipow(BigInt(delta), static_cast<unsigned long>(2 * q.g)));
    form.push_back({c, {(q.h / delta) * (q.g - 1) + 1, q.r * delta, q.k * delta}});
  }
  return form;
}

BigInt multiplicity(const SplitQuery& q, long omega) {
  const Rational m = evaluate(multiplicity_form(q, omega));
  if (!m.is_integer() || m.sign() < 0)
    throw ConsistencyError("multiplicity for omega = " + std::to_string(omega) + " evaluates to " + m.to_string() +
                           ", not a non-negative integer");
  return m.numerator();
}

Rational multiplicity_oracle(const SplitQuery& q, const CharacterLabel& xi) {
  q.validate_trace();
  const auto hist = pairing_histogram(q, xi);
  CycNum total(q.h);
  for (const auto& [order, counts] : hist) {
    const CycNum chars = CycNum::from_power_counts(q.h, counts);
    if (chars.is_zero()) continue;
    total += chars * trace_of_torsion(q, order).value;
  }
  const Rational norm(BigInt(ipow(BigInt(q.r), static_cast<unsigned long>(q.g)) *
                             ipow(BigInt(q.h), static_cast<unsigned long>(2 * q.g))));
  return extract_rational(total) / norm;
}

VForm multiplicity_oracle_form(const SplitQuery& q, const CharacterLabel& xi) {
  q.validate_trace();
  const auto hist = pairing_histogram(q, xi);
  const Rational norm(BigInt(ipow(BigInt(q.r), static_cast<unsigned long>(q.g)) *
                             ipow(BigInt(q.h), static_cast<unsigned long>(2 * q.g))));
  VForm form;
  for (const auto& [order, counts] : hist) {
    const Rational s = extract_rational(CycNum::from_power_counts(q.h, counts));
    const VTerm t = trace_term(q, order);
    form.push_back({s * t.coefficient / norm, t.v});
  }
  return form;
}

bool check_rank_consistency(const SplitQuery& q, bool pointwise) {
  q.validate_multiplicity();
  std::map<long, BigInt> m;
  for (long omega : divisors(q.h)) m[omega] = multiplicity(q, omega);
  BigInt total = 0;
  if (pointwise) {
    for_each_point(q.h, q.g, [&](const TorsionPoint& xi) { total += m[xi.order()]; });
  } else {
    for (const auto& [omega, mult] : m) total += count_order(q.h, omega, q.g) * mult;
  }
  total *= ipow(BigInt(q.r), static_cast<unsigned long>(q.g));
  return total == verlinde_dim({q.g, q.h * q.r, q.h * q.k});
}

Real trace_of_torsion_float(const SplitQuery& q, long delta, unsigned bits) {
  const VTerm t = trace_term(q, delta);
  return Real(t.coefficient, bits) * v_number_float(t.v, bits);
}

Real multiplicity_float(const SplitQuery& q, long omega, unsigned bits) {
  Real s(bits);
  for (const auto& t : multiplicity_form(q, omega))
    if (!t.coefficient.is_zero()) s += Real(t.coefficient, bits) * v_number_float(t.v, bits);
  return s;
}

void clear_trace_cache() {
  std::lock_guard lock(g_trace_mutex);
  g_trace_cache.clear();
}

}  // namespace thetakit
