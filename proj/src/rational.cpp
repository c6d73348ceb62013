#include "thetakit/rational.hpp"

#include <ostream>

#include "thetakit/errors.hpp"

namespace thetakit {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw ConsistencyError("expected an integer, got " + to_string());
  return q_.get_num();
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  mpq_class r(num, den);  // already coprime
  return Rational(std::move(r));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace thetakit
