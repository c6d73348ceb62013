#pragma once

#include <mpfr.h>

#include <string>

#include "thetakit/rational.hpp"

namespace thetakit {

/// Default mantissa width of the floating cross-check mode.
inline constexpr unsigned kDefaultFloatBits = 128;

/// Owning wrapper over an MPFR number with an explicit precision.
/// Used only for cross-checks; never authoritative.
class Real {
 public:
  explicit Real(unsigned bits = kDefaultFloatBits);
  Real(const Rational& q, unsigned bits);
  Real(long v, unsigned bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(unsigned bits);

  unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  Real abs() const;
  Real pow(long e) const;
  Real sin() const;
  Real cos() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

/// |a - b| <= tol * max(|a|, |b|), or both are zero.
bool relative_close(const Real& a, const Real& b, double tol);

}  // namespace thetakit
