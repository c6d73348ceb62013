#pragma once

#include <vector>

#include "thetakit/cyclotomic.hpp"

namespace thetakit {

/// (t, x, y) in Z/m x (Z/m)^g x (Z/m)^g with
/// (t,x,y)(t',x',y') = (t + t' + <x,y'>, x + x', y + y').
struct HeisenbergElement {
  long m;
  long t;
  std::vector<long> x;
  std::vector<long> y;

  long genus() const { return static_cast<long>(x.size()); }
  static HeisenbergElement identity(long m, long g);
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

HeisenbergElement multiply(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement inverse(const HeisenbergElement& a);

/// A monomial matrix: row z has the single entry zeta_m^{power[z]} in column column[z].
struct MonomialMatrix {
  long m;
  std::vector<long> column;
  std::vector<long> power;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// The Schrodinger model on functions f: (Z/m)^g -> Q(zeta_m):
/// (rho(t,x,y) f)(z) = zeta_m^{n(t + <y,z>)} f(z + x).
class SchrodingerRep {
 public:
  long modulus() const { return m_; }
  long weight() const { return n_; }
  long genus() const { return g_; }
  long dimension() const { return dim_; }

  MonomialMatrix action(const HeisenbergElement& h) const;
  /// Dense m^g x m^g matrix over Q(zeta_m).
  std::vector<std::vector<CycNum>> matrix(const HeisenbergElement& h) const;
  CycNum character(const HeisenbergElement& h) const;

 private:
  friend SchrodingerRep schrodinger_rep(long m, long n, long g);
  SchrodingerRep(long m, long n, long g);

  long m_, n_, g_, dim_;
};

/// Requires m odd and gcd(m, n) = 1; checks the homomorphism property on
/// all pairs of generators.
SchrodingerRep schrodinger_rep(long m, long n, long g);

/// <chi, chi> = 1 computed exactly, plus vanishing of chi off the center.
bool check_schrodinger_irreducible(const SchrodingerRep& rep);

struct IrrepClass {
  long dimension;
  long central_weight;
  long multiplicity;
};

/// Irreducible representations of the group of order m^{2g+1} grouped by
/// central character, from a brute-force conjugacy class count. Checks that
/// the class count matches, that sum dim^2 = m^{2g+1}, and that each unit
/// weight carries exactly one irreducible of dimension m^g.
std::vector<IrrepClass> irrep_census(long m, long g, long budget = 100000);

}  // namespace thetakit
