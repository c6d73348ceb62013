#include "thetakit/chern.hpp"

#include <numeric>
#include <vector>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

Rational int_pow(long base, long e) { return Rational(ipow(BigInt(base), static_cast<unsigned long>(e))); }

void require_genus(long g) {
  if (g < 1) throw HypothesisError("genus must be >= 1");
}

}  // namespace

SlopeClass SlopeClass::bundle(long g, const Rational& rank, const Rational& slope) {
  require_genus(g);
  if (!rank.is_integer() || rank.sign() <= 0)
    throw HypothesisError("bundle rank must be a positive integer (got " + rank.to_string() + ")");
  return {g, rank, slope};
}

SlopeClass SlopeClass::semihomogeneous(long a, long b, long g) {
  if (a < 1) throw HypothesisError("W_{a,b} needs a >= 1");
  return bundle(g, int_pow(a, g), Rational(b, a));
}

SlopeClass SlopeClass::theta_power(long m, long g) { return bundle(g, Rational(1), Rational(m)); }

void IsogenyMatrix::validate() const {
  if (det() == 0) throw HypothesisError("isogeny matrix must have nonzero determinant");
}

Rational euler_char(const SlopeClass& c) {
  require_genus(c.g);
  return c.rank * c.slope.pow(c.g);
}

SlopeClass fm_transform(const SlopeClass& c) {
  require_genus(c.g);
  if (c.slope.is_zero()) throw HypothesisError("slope 0: the transform leaves the slope-class model");
  return {c.g, c.rank * c.slope.pow(c.g), -c.slope.inverse()};
}

SlopeClass fm_transform_semihomogeneous(long a, long b, long g) {
  const SlopeClass out = fm_transform(SlopeClass::semihomogeneous(a, b, g));
  const SlopeClass expect = SlopeClass::semihomogeneous(b, a, g).dual();
  if (!(out == expect))
    throw ConsistencyError("transform of W_{a,b} is not the dual of W_{b,a}");
  return out;
}

namespace {

// One factor of (A x A) in the model: basis 1, t1, t2, P, t1 t2 with
// t_i^2 = 0, t_i P = 0, P^2 = -2 t1 t2. The full ring is the g-fold tensor
// power, indexed in base 5.
constexpr int kOne = 0, kT1 = 1, kT2 = 2, kP = 3, kTop = 4;

struct FactorProduct {
  int basis;  // -1 when zero
  long coeff;
};

FactorProduct factor_mul(int x, int y) {
  if (x == kOne) return {y, 1};
  if (y == kOne) return {x, 1};
  if ((x == kT1 && y == kT2) || (x == kT2 && y == kT1)) return {kTop, 1};
  if (x == kP && y == kP) return {kTop, -2};
  return {-1, 0};
}

struct ChernRing {
  long g;
  long size;

  explicit ChernRing(long genus) : g(genus), size(1) {
    for (long i = 0; i < g; ++i) size *= 5;
  }

  int digit(long index, long factor) const {
    for (long i = 0; i < factor; ++i) index /= 5;
    return static_cast<int>(index % 5);
  }

  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> out(static_cast<size_t>(size), Rational(0));
    for (long i = 0; i < size; ++i) {
      if (a[static_cast<size_t>(i)].is_zero()) continue;
      for (long j = 0; j < size; ++j) {
        if (b[static_cast<size_t>(j)].is_zero()) continue;
        long index = 0, scale = 1, coeff = 1;
        bool zero = false;
        for (long f = 0; f < g && !zero; ++f) {
          const auto p = factor_mul(digit(i, f), digit(j, f));
          if (p.basis < 0) zero = true;
          index += p.basis * scale;
          coeff *= p.coeff;
          scale *= 5;
        }
        if (!zero) out[static_cast<size_t>(index)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] * Rational(coeff);
      }
    }
    return out;
  }

  std::vector<Rational> exp(const std::vector<Rational>& x) const {
    std::vector<Rational> term(static_cast<size_t>(size), Rational(0)), out;
    term[0] = Rational(1);
    out = term;
    for (long j = 1; j <= 2 * g; ++j) {
      term = mul(term, x);
      for (auto& c : term) c /= Rational(j);
      for (long i = 0; i < size; ++i) out[static_cast<size_t>(i)] += term[static_cast<size_t>(i)];
    }
    return out;
  }

  // sum over factors of the basis element b in that factor
  std::vector<Rational> sum_of(int b) const {
    std::vector<Rational> out(static_cast<size_t>(size), Rational(0));
    long scale = 1;
    for (long f = 0; f < g; ++f, scale *= 5) out[static_cast<size_t>(b * scale)] = Rational(1);
    return out;
  }
};

}  // namespace

SlopeClass fm_transform_kernel(const SlopeClass& c) {
  require_genus(c.g);
  if (c.g > 4) throw BudgetError("kernel cross-check is limited to g <= 4");
  if (c.slope.is_zero()) throw HypothesisError("slope 0: the transform leaves the slope-class model");
  const ChernRing R(c.g);
  auto theta1 = R.sum_of(kT1);
  for (auto& x : theta1) x *= c.slope;
  auto integrand = R.mul(R.exp(theta1), R.exp(R.sum_of(kP)));
  for (auto& x : integrand) x *= c.rank;
  // integrate over the first factor: keep terms carrying t1 in every factor
  // (t1 or t1 t2), leaving a polynomial in the t2's
  std::vector<Rational> pushed(static_cast<size_t>(1L << c.g), Rational(0));  // bit f = t2 in factor f
  for (long i = 0; i < R.size; ++i) {
    if (integrand[static_cast<size_t>(i)].is_zero()) continue;
    long mask = 0;
    bool top = true;
    for (long f = 0; f < c.g; ++f) {
      const int d = R.digit(i, f);
      if (d == kT1) continue;
      if (d == kTop) {
        mask |= 1L << f;
        continue;
      }
      top = false;
      break;
    }
    if (top) pushed[static_cast<size_t>(mask)] += integrand[static_cast<size_t>(i)];
  }
  const Rational rank = pushed[0];
  if (rank.is_zero()) throw ConsistencyError("kernel transform has zero rank");
  const Rational slope = pushed[1] / rank;
  for (long mask = 0; mask < (1L << c.g); ++mask) {
    const long bits = __builtin_popcountl(static_cast<unsigned long>(mask));
    if (pushed[static_cast<size_t>(mask)] != rank * slope.pow(bits))
      throw ConsistencyError("kernel transform is not of the form rank * exp(slope Theta)");
  }
  return {c.g, rank, slope};
}

SlopeClass isogeny_pullback_A(const SlopeClass& c, long m) {
  if (m == 0) throw HypothesisError("multiplication by 0 is not an isogeny");
  return {c.g, c.rank, c.slope * Rational(m * m)};
}

SlopeClass pullback_semihomogeneous(long a, long b, long g) {
  const SlopeClass out = isogeny_pullback_A(SlopeClass::semihomogeneous(a, b, g), a);
  if (!(out == SlopeClass{g, int_pow(a, g), Rational(a * b)}))
    throw ConsistencyError("a^* W_{a,b} is not a^g copies of Theta^{ab}");
  return out;
}

SlopeMatrix box(const SlopeClass& c1, const SlopeClass& c2) {
  if (c1.g != c2.g) throw HypothesisError("box product of classes of different genus");
  return {c1.g, c1.rank * c2.rank, Matrix2{{{c1.slope, Rational(0)}, {Rational(0), c2.slope}}}};
}

SlopeMatrix isogeny_pullback_AxA(const SlopeMatrix& c, const IsogenyMatrix& M) {
  M.validate();
  const Rational m[2][2] = {{Rational(M.a), Rational(M.b)}, {Rational(M.c), Rational(M.d)}};
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational s(0);
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) s += m[p][i] * c.Q[p][q] * m[q][j];
      out[i][j] = s;
    }
  return {c.g, c.rank, out};
}

SlopeMatrix pullback_along_sum(const SlopeClass& c, long a, long b) {
  const Rational ra(a), rb(b);
  return {c.g, c.rank, Matrix2{{{c.slope * ra * ra, c.slope * ra * rb}, {c.slope * ra * rb, c.slope * rb * rb}}}};
}

namespace {
void require_odd_coprime(long a, long b) {
  if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0 || std::gcd(a, b) != 1)
    throw HypothesisError("a and b must be odd, positive and coprime");
}
}  // namespace

bool check_wirtinger_dims(long a, long b, long g) {
  require_odd_coprime(a, b);
  const Rational target = int_pow(a + b, g);
  const bool sections = euler_char(SlopeClass::semihomogeneous(a, a + b, g)) == target &&
                        euler_char(SlopeClass::semihomogeneous(b, a + b, g)) == target;
  // the multiplicity space of a^* W_{a,b} is a Schrodinger representation of
  // dimension a^g
  const bool heis = pullback_semihomogeneous(a, b, g).rank == int_pow(a, g) &&
                    SlopeClass::semihomogeneous(a, b, g).rank == int_pow(a, g);
  return sections && heis;
}

bool check_wirtinger_matrix(long a, long b, long g) {
  const SlopeMatrix in = box(SlopeClass::theta_power(1, g), SlopeClass::theta_power(a * b, g));
  const SlopeMatrix out = isogeny_pullback_AxA(in, {a, b, 1, -1});
  const SlopeMatrix expect = box(SlopeClass::theta_power(a * (a + b), g), SlopeClass::theta_power(b * (a + b), g));
  return out == expect;
}

bool check_wirtinger_matrix_general(long a, long b, long c, long d, long g) {
  const long D = a * d + b * c;
  if (D == 0) throw HypothesisError("ad + bc must be nonzero");
  const SlopeMatrix in = {g, Rational(1), Matrix2{{{Rational(1, a * b), Rational(0)}, {Rational(0), Rational(1, c * d)}}}};
  const SlopeMatrix out = isogeny_pullback_AxA(in, {a, b, c, -d});
  const SlopeMatrix expect = {g, Rational(1), Matrix2{{{Rational(D, b * d), Rational(0)}, {Rational(0), Rational(D, a * c)}}}};
  // slopes of W_{bd,D} and W_{ac,D}
  const bool slopes = SlopeClass::semihomogeneous(b * d, D, g).slope == Rational(D, b * d) &&
                      SlopeClass::semihomogeneous(a * c, D, g).slope == Rational(D, a * c);
  return out == expect && slopes;
}

bool check_sum_map_bookkeeping(long a, long b, long g) {
  const SlopeMatrix lhs = pullback_along_sum(SlopeClass::semihomogeneous(a * b, 1, g), a, b);
  SlopeMatrix rhs = box(SlopeClass::semihomogeneous(b, a, g), SlopeClass::semihomogeneous(a, b, g));
  rhs.Q[0][1] = rhs.Q[1][0] = Rational(1);
  return lhs == rhs && lhs.rank == int_pow(a * b, g);
}

}  // namespace thetakit
