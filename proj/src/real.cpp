#include "thetakit/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace thetakit {

Real::Real(unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rational& q, unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(long v, unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(unsigned bits) {
  Real out(bits);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), v_);
  return buf.data();
}

namespace {
// Widen the destination so mixed-precision arithmetic keeps the finer one.
void widen(mpfr_ptr dst, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(dst)) mpfr_prec_round(dst, mpfr_get_prec(other), MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

Real Real::abs() const {
  Real out(*this);
  mpfr_abs(out.v_, out.v_, MPFR_RNDN);
  return out;
}

Real Real::pow(long e) const {
  Real out(bits());
  mpfr_pow_si(out.v_, v_, e, MPFR_RNDN);
  return out;
}

Real Real::sin() const {
  Real out(bits());
  mpfr_sin(out.v_, v_, MPFR_RNDN);
  return out;
}

Real Real::cos() const {
  Real out(bits());
  mpfr_cos(out.v_, v_, MPFR_RNDN);
  return out;
}

bool relative_close(const Real& a, const Real& b, double tol) {
  const Real diff = (a - b).abs();
  Real scale = a.abs();
  const Real bb = b.abs();
  if (scale < bb) scale = bb;
  if (mpfr_zero_p(scale.get())) return true;
  return mpfr_cmp_d((diff / scale).get(), tol) <= 0;
}

}  // namespace thetakit
