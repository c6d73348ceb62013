#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thetakit/rational.hpp"
#include "thetakit/real.hpp"

namespace thetakit {

/// Integer polynomial, coefficients in increasing degree.
using IntPoly = std::vector<std::int64_t>;

/// Phi_n(x), by exact division of x^n - 1 by Phi_d over the proper divisors d.
IntPoly cyclotomic_polynomial(long n);

/// Static data for Q(zeta_n) = Q[x]/(Phi_n): the modulus and reduction tables.
/// Instances are interned per conductor and live for the whole program.
class CyclotomicField {
 public:
  static const CyclotomicField& get(long n);

  long conductor() const { return n_; }
  long degree() const { return phi_; }
  const IntPoly& modulus() const { return modulus_; }

  /// x^j mod Phi_n for 0 <= j < n, each of length degree().
  const std::vector<std::int64_t>& zeta_power(long j) const;
  /// x^j mod Phi_n for degree() <= j <= 2*degree() - 2.
  const std::vector<std::int64_t>& high_power(long j) const { return high_[static_cast<size_t>(j - phi_)]; }

 private:
  explicit CyclotomicField(long n);

  long n_;
  long phi_;
  IntPoly modulus_;
  std::vector<std::vector<std::int64_t>> high_;
  std::vector<std::vector<std::int64_t>> zeta_;
};

/// Element of Q(zeta_n), stored as its coordinates in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1). The representation is canonical, so equality
/// is coefficient equality.
class CycNum {
 public:
  /// Zero of Q(zeta_n).
  explicit CycNum(long conductor);
  CycNum(long conductor, const Rational& value);
  CycNum(long conductor, std::vector<Rational> coeffs);

  /// zeta_n^power, any integer power.
  static CycNum zeta(long conductor, long power);
  /// sum_j counts[j] * zeta_n^j over 0 <= j < n.
  static CycNum from_power_counts(long conductor, std::span<const BigInt> counts);
  /// 2 - zeta^d - zeta^-d, the square of |2 sin(pi d / n)|.
  static CycNum sine_square(long conductor, long d);

  long conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& q);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  CycNum inverse() const;
  /// Integer power; negative exponents go through inverse().
  CycNum pow(long exponent) const;
  /// Field automorphism zeta -> zeta^a, gcd(a, n) = 1.
  CycNum galois(long a) const;
  /// Complex conjugation, zeta -> zeta^-1.
  CycNum conjugate() const { return galois(-1); }

  /// Value at zeta = exp(2 pi i / n) with the given mantissa width.
  std::pair<Real, Real> embed(unsigned bits = kDefaultFloatBits) const;

  std::string to_string() const;

 private:
  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_mul(const CycNum& a, const CycNum& b);
CycNum cyc_inv(const CycNum& a);

/// The constant coefficient of a rational element. Throws NonRationalError
/// carrying the largest absolute residual coefficient otherwise.
Rational extract_rational(const CycNum& a);

}  // namespace thetakit
