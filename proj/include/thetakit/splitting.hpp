#pragma once

#include <vector>

#include "thetakit/rational.hpp"
#include "thetakit/real.hpp"
#include "thetakit/torsion.hpp"
#include "thetakit/verlinde.hpp"

namespace thetakit {

/// (g, r, k, h): rank r, level k, odd multiplier h.
struct SplitQuery {
  long g;
  long r;
  long k;
  long h;

  /// Hypotheses of the trace formula: g, r, k >= 1 and h odd.
  void validate_trace() const;
  /// Additionally gcd(r, k) = 1.
  void validate_multiplicity() const;
};

struct TraceValue {
  Rational value;
};

/// One summand c * v_{g'}(r', k') of a linear combination of Verlinde numbers.
struct VTerm {
  Rational coefficient;
  VerlindeQuery v;
};
using VForm = std::vector<VTerm>;

/// Evaluates sum c_i v_i exactly. Terms with zero coefficient are skipped.
Rational evaluate(const VForm& form);
/// Collects equal Verlinde queries and drops zero coefficients.
VForm normalize(VForm form);

/// Trace of a point of exact order delta acting on level-hk theta functions
/// of rank hr. Memoized.
TraceValue trace_of_torsion(const SplitQuery& q, long delta);
VTerm trace_term(const SplitQuery& q, long delta);

/// Multiplicity of the summand labelled by characters of order omega,
/// asserted to be a non-negative integer.
BigInt multiplicity(const SplitQuery& q, long omega);
VForm multiplicity_form(const SplitQuery& q, long omega);

/// Fourier inversion of the traces against the character xi.
Rational multiplicity_oracle(const SplitQuery& q, const CharacterLabel& xi);
/// The same average with each order class summed separately; the sums are
/// rational, so the oracle is a linear form in Verlinde numbers.
VForm multiplicity_oracle_form(const SplitQuery& q, const CharacterLabel& xi);

/// r^g * sum over characters of the multiplicities against the rank of the
/// whole bundle. `pointwise` enumerates all h^{2g} characters instead of
/// weighting order classes.
bool check_rank_consistency(const SplitQuery& q, bool pointwise = false);

Real trace_of_torsion_float(const SplitQuery& q, long delta, unsigned bits = kDefaultFloatBits);
Real multiplicity_float(const SplitQuery& q, long omega, unsigned bits = kDefaultFloatBits);

void clear_trace_cache();

}  // namespace thetakit
