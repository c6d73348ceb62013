#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace thetakit {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Thin value type over GMP's mpq.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a", "-a" or "a/b".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Exact integer value; throws ConsistencyError if not an integer.
  BigInt to_integer() const;
  double to_double() const { return q_.get_d(); }

  std::string to_string() const;

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents invert (zero base then throws).
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }
  /// Wraps an mpq that is already canonical.
  static Rational from_raw(mpq_class q) { return Rational(std::move(q)); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// base^exponent for exponent >= 0.
BigInt ipow(const BigInt& base, unsigned long exponent);

}  // namespace thetakit
