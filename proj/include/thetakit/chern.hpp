#pragma once

#include <array>

#include "thetakit/rational.hpp"

namespace thetakit {

/// ch = rank * exp(slope * Theta) on a g-dimensional principally polarized
/// abelian variety A.
struct SlopeClass {
  long g;
  Rational rank;
  Rational slope;

  /// A genuine bundle class: rank must be a positive integer.
  static SlopeClass bundle(long g, const Rational& rank, const Rational& slope);
  /// W_{a,b}: rank a^g, slope b/a.
  static SlopeClass semihomogeneous(long a, long b, long g);
  static SlopeClass theta_power(long m, long g);

  SlopeClass dual() const { return {g, rank, -slope}; }
  friend bool operator==(const SlopeClass&, const SlopeClass&) = default;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

/// Class on A x A: rank * exp(Q11 Theta_1 + Q22 Theta_2 + Q12 P), P the
/// Poincare class. Q is kept symmetric.
struct SlopeMatrix {
  long g;
  Rational rank;
  Matrix2 Q;

  friend bool operator==(const SlopeMatrix&, const SlopeMatrix&) = default;
};

/// (x, y) -> (a x + b y, c x + d y) on A x A.
struct IsogenyMatrix {
  long a, b, c, d;

  long det() const { return a * d - b * c; }
  void validate() const;
};

Rational euler_char(const SlopeClass& c);

/// (rank, lambda) -> (rank lambda^g, -1/lambda).
SlopeClass fm_transform(const SlopeClass& c);
/// Transform of W_{a,b}, asserted to be the dual of W_{b,a}.
SlopeClass fm_transform_semihomogeneous(long a, long b, long g);
/// The same transform computed by integrating ch * exp(P) over the first
/// factor in a truncated Chern ring, for g <= 4.
SlopeClass fm_transform_kernel(const SlopeClass& c);

/// Pullback under multiplication by m: the slope scales by m^2.
SlopeClass isogeny_pullback_A(const SlopeClass& c, long m);
/// a^* W_{a,b}, asserted to be a^g copies of Theta^{ab}.
SlopeClass pullback_semihomogeneous(long a, long b, long g);

SlopeMatrix box(const SlopeClass& c1, const SlopeClass& c2);
/// Q -> M^T Q M, rank unchanged.
SlopeMatrix isogeny_pullback_AxA(const SlopeMatrix& c, const IsogenyMatrix& M);
/// Pullback of a class on A along A x A -> A, (x, y) -> a x + b y.
SlopeMatrix pullback_along_sum(const SlopeClass& c, long a, long b);

/// W_{a,a+b} and W_{b,a+b} both have (a+b)^g sections, and the Heisenberg
/// multiplicity space of a^* W_{a,b} has dimension a^g = rank W_{a,b}.
bool check_wirtinger_dims(long a, long b, long g);
/// M = [[a, b], [1, -1]] on diag(1, ab) gives diag(a(a+b), b(a+b)).
bool check_wirtinger_matrix(long a, long b, long g);
/// M = [[a, b], [c, -d]] on diag(1/ab, 1/cd) gives diag(D/bd, D/ac), D = ad + bc.
bool check_wirtinger_matrix_general(long a, long b, long c, long d, long g);
/// Pulling W_{ab,1} back along a x + b y gives W_{b,a} box W_{a,b} twisted by P,
/// rank (ab)^g on both sides.
bool check_sum_map_bookkeeping(long a, long b, long g);

}  // namespace thetakit
