#pragma once

#include "thetakit/rational.hpp"
#include "thetakit/verlinde.hpp"

namespace thetakit {

/// Level-k theta functions for SL_r / Z_d: r odd, d | r, d | k.
struct PglQuery {
  long g;
  long r;
  long k;
  long d;

  void validate() const;
};

struct CoperiodResult {
  SubsetS set;
  long coperiod;
};

/// Largest delta | gcd(r, k) such that S is the union of delta translates of
/// S ∩ {1..n/delta} by multiples of n/delta.
long coperiod(const SubsetS& S, long r, long k);

/// (gcd(coperiod, d) / d)^{2g}, cross-checked against the order-count form.
Rational xi_weight(const SubsetS& S, long d, long r, long k, long g);

/// Average of torsion traces over the d-torsion; integer valued.
Rational pgl_dim_charsum(const PglQuery& q);
/// Weighted subset sum with weights xi_d.
Rational pgl_dim_coperiodic(const PglQuery& q);

/// prod_{i<delta} |2 sin(x + i pi / delta)| = |2 sin(delta x)| for
/// x = x_over_pi * pi, compared after squaring in a cyclotomic field.
bool check_sine_identity(long delta, const Rational& x_over_pi);

/// For a delta-coperiodic S: the product over pairs of S of the sine squares
/// equals delta^r times the delta-th power of the product over pairs of the
/// base set at angles scaled by delta.
bool check_coperiodic_product(const SubsetS& S, long r, long k, long delta);

}  // namespace thetakit
