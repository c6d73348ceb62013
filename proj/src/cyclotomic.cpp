#include "thetakit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "thetakit/arith.hpp"
#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

// Exact division of a by a monic divisor b; throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) throw ConsistencyError("cyclotomic division: degree too small");
  IntPoly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw ConsistencyError("cyclotomic division left a remainder");
  return q;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient and remainder over Q; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = b.back().inverse();
  for (size_t i = a.size(); i-- >= b.size();) {
    if (a[i].is_zero()) continue;
    const Rational c = a[i] * lead_inv;
    const size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard lock(registry_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d : divisors(n))
    if (d != n) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard lock(registry_mutex());
  cache.emplace(n, p);
  return p;
}

const CyclotomicField& CyclotomicField::get(long n) {
  static std::map<long, std::unique_ptr<CyclotomicField>> fields;
  static std::mutex m;
  {
    std::lock_guard lock(m);
    if (auto it = fields.find(n); it != fields.end()) return *it->second;
  }
  auto built = std::unique_ptr<CyclotomicField>(new CyclotomicField(n));
  std::lock_guard lock(m);
  auto [it, inserted] = fields.emplace(n, std::move(built));
  return *it->second;
}

CyclotomicField::CyclotomicField(long n) : n_(n), modulus_(cyclotomic_polynomial(n)) {
  phi_ = static_cast<long>(modulus_.size()) - 1;
  const long top = std::max(n_ - 1, 2 * phi_ - 2);
  std::vector<std::int64_t> cur(static_cast<size_t>(phi_), 0);
  cur[0] = 1;
  std::vector<std::vector<std::int64_t>> powers;
  for (long j = 0; j <= top; ++j) {
    powers.push_back(cur);
    // multiply by x and fold the x^phi term back with the monic modulus
    const std::int64_t carry = cur.back();
    for (long i = phi_ - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
    cur[0] = 0;
    for (long i = 0; i < phi_; ++i) cur[static_cast<size_t>(i)] -= carry * modulus_[static_cast<size_t>(i)];
  }
  zeta_.assign(powers.begin(), powers.begin() + n_);
  for (long j = phi_; j <= 2 * phi_ - 2; ++j) high_.push_back(powers[static_cast<size_t>(j)]);
}

const std::vector<std::int64_t>& CyclotomicField::zeta_power(long j) const {
  long r = j % n_;
  if (r < 0) r += n_;
  return zeta_[static_cast<size_t>(r)];
}

CycNum::CycNum(long conductor)
    : field_(&CyclotomicField::get(conductor)),
      coeffs_(static_cast<size_t>(field_->degree()), Rational(0)) {}

CycNum::CycNum(long conductor, const Rational& value) : CycNum(conductor) { coeffs_[0] = value; }

CycNum::CycNum(long conductor, std::vector<Rational> coeffs)
    : field_(&CyclotomicField::get(conductor)), coeffs_(std::move(coeffs)) {
  if (static_cast<long>(coeffs_.size()) != field_->degree())
    throw std::invalid_argument("CycNum: coefficient vector must have length phi(n) = " +
                                std::to_string(field_->degree()));
}

CycNum CycNum::zeta(long conductor, long power) {
  CycNum out(conductor);
  const auto& v = out.field_->zeta_power(power);
  for (size_t i = 0; i < v.size(); ++i) out.coeffs_[i] = Rational(static_cast<long>(v[i]));
  return out;
}

CycNum CycNum::from_power_counts(long conductor, std::span<const BigInt> counts) {
  CycNum out(conductor);
  std::vector<BigInt> acc(out.coeffs_.size(), 0);
  for (size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    const auto& v = out.field_->zeta_power(static_cast<long>(j));
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) acc[i] += counts[j] * static_cast<long>(v[i]);
  }
  for (size_t i = 0; i < acc.size(); ++i) out.coeffs_[i] = Rational(acc[i]);
  return out;
}

CycNum CycNum::sine_square(long conductor, long d) {
  CycNum out(conductor, Rational(2));
  out -= zeta(conductor, d);
  out -= zeta(conductor, -d);
  return out;
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

namespace {
void require_same_field(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor())
    throw std::invalid_argument("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                                std::to_string(b.conductor()));
}
}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same_field(*this, o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  require_same_field(*this, o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  require_same_field(a, b);
  const long phi = a.field_->degree();
  std::vector<mpq_class> prod(static_cast<size_t>(2 * phi - 1), 0);
  for (long i = 0; i < phi; ++i) {
    const auto& ai = a.coeffs_[static_cast<size_t>(i)].raw();
    if (sgn(ai) == 0) continue;
    for (long j = 0; j < phi; ++j) {
      const auto& bj = b.coeffs_[static_cast<size_t>(j)].raw();
      if (sgn(bj) == 0) continue;
      prod[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  for (long j = phi; j <= 2 * phi - 2; ++j) {
    const auto& c = prod[static_cast<size_t>(j)];
    if (sgn(c) == 0) continue;
    const auto& red = a.field_->high_power(j);
    for (long l = 0; l < phi; ++l)
      if (red[static_cast<size_t>(l)] != 0) prod[static_cast<size_t>(l)] += c * red[static_cast<size_t>(l)];
  }
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(phi));
  for (long l = 0; l < phi; ++l) out.push_back(Rational::from_raw(std::move(prod[static_cast<size_t>(l)])));
  return CycNum(a.conductor(), std::move(out));
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  // Extended Euclid on (Phi_n, a): maintain s_i with r_i = s_i * a mod Phi_n.
  Poly r0, r1 = coeffs_;
  for (auto c : field_->modulus()) r0.emplace_back(static_cast<long>(c));
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw ConsistencyError("cyclotomic inverse: gcd with Phi_n is nontrivial");
  const Rational scale = r1[0].inverse();
  // reduce s1 modulo Phi_n, then normalize
  Poly modulus;
  for (auto c : field_->modulus()) modulus.emplace_back(static_cast<long>(c));
  auto [q, s] = divmod(s1, modulus);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (size_t i = 0; i < s.size(); ++i) out[i] = s[i] * scale;
  return CycNum(conductor(), std::move(out));
}

CycNum CycNum::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNum result(conductor(), Rational(1));
  CycNum base(*this);
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CycNum CycNum::galois(long a) const {
  const long n = conductor();
  if (std::gcd(a, n) != 1) throw std::invalid_argument("galois: exponent must be coprime to the conductor");
  CycNum out(n);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& v = field_->zeta_power(a * static_cast<long>(j));
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out.coeffs_[i] += coeffs_[j] * Rational(static_cast<long>(v[i]));
  }
  return out;
}

std::pair<Real, Real> CycNum::embed(unsigned bits) const {
  Real re(bits), im(bits);
  const Real two_pi_over_n = Real::pi(bits) * Real(2, bits) / Real(conductor(), bits);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const Real angle = two_pi_over_n * Real(static_cast<long>(j), bits);
    const Real c(coeffs_[j], bits);
    re += c * angle.cos();
    im += c * angle.sin();
  }
  return {re, im};
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[j];
    if (j > 0) os << "*z" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << "0";
  os << " [z = zeta_" << conductor() << "]";
  return os.str();
}

CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
CycNum cyc_inv(const CycNum& a) { return a.inverse(); }

Rational extract_rational(const CycNum& a) {
  if (a.is_rational()) return a.coeffs()[0];
  Rational worst(0);
  for (size_t i = 1; i < a.coeffs().size(); ++i) worst = std::max(worst, a.coeffs()[i].abs());
  throw NonRationalError("value in Q(zeta_" + std::to_string(a.conductor()) +
                             ") is not rational; max residual coefficient " + worst.to_string(),
                         worst.to_string());
}

}  // namespace thetakit
