#include "thetakit/heisenberg.hpp"

#include <cmath>
#include <numeric>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long ipow_long(long b, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

void require_odd_modulus(long m) {
  if (m < 1) throw HypothesisError("modulus m must be >= 1");
  if (m % 2 == 0) throw HypothesisError("m must be odd: the even-m construction is not implemented");
}

// Points of (Z/m)^g by base-m index.
std::vector<long> digits(long index, long m, long g) {
  std::vector<long> out(static_cast<size_t>(g));
  for (long i = 0; i < g; ++i) {
    out[static_cast<size_t>(i)] = index % m;
    index /= m;
  }
  return out;
}

long undigits(const std::vector<long>& v, long m) {
  long index = 0;
  for (size_t i = v.size(); i-- > 0;) index = index * m + mod(v[i], m);
  return index;
}

long dot(const std::vector<long>& a, const std::vector<long>& b, long m) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % m;
  return mod(s, m);
}

std::vector<HeisenbergElement> generators(long m, long g) {
  std::vector<HeisenbergElement> gens;
  auto e = HeisenbergElement::identity(m, g);
  e.t = 1 % m;
  gens.push_back(e);
  for (long i = 0; i < g; ++i) {
    auto a = HeisenbergElement::identity(m, g);
    a.x[static_cast<size_t>(i)] = 1 % m;
    gens.push_back(a);
    auto b = HeisenbergElement::identity(m, g);
    b.y[static_cast<size_t>(i)] = 1 % m;
    gens.push_back(b);
  }
  return gens;
}

long element_index(const HeisenbergElement& h) {
  const long mg = ipow_long(h.m, h.genus());
  return h.t + h.m * (undigits(h.x, h.m) + mg * undigits(h.y, h.m));
}

HeisenbergElement element_at(long index, long m, long g) {
  const long mg = ipow_long(m, g);
  HeisenbergElement h{m, index % m, {}, {}};
  index /= m;
  h.x = digits(index % mg, m, g);
  h.y = digits(index / mg, m, g);
  return h;
}

HeisenbergElement commutator(const HeisenbergElement& a, const HeisenbergElement& b) {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

bool is_central(const HeisenbergElement& h) {
  for (size_t i = 0; i < h.x.size(); ++i)
    if (h.x[i] != 0 || h.y[i] != 0) return false;
  return true;
}

MonomialMatrix compose(const MonomialMatrix& A, const MonomialMatrix& B) {
  MonomialMatrix out{A.m, A.column, A.power};
  for (size_t z = 0; z < A.column.size(); ++z) {
    const auto c = static_cast<size_t>(A.column[z]);
    out.column[z] = B.column[c];
    out.power[z] = mod(A.power[z] + B.power[c], A.m);
  }
  return out;
}

}  // namespace

HeisenbergElement HeisenbergElement::identity(long m, long g) {
  return {m, 0, std::vector<long>(static_cast<size_t>(g), 0), std::vector<long>(static_cast<size_t>(g), 0)};
}

HeisenbergElement multiply(const HeisenbergElement& a, const HeisenbergElement& b) {
  if (a.m != b.m || a.x.size() != b.x.size()) throw std::invalid_argument("elements of different groups");
  const long m = a.m;
  HeisenbergElement out{m, mod(a.t + b.t + dot(a.x, b.y, m), m), a.x, a.y};
  for (size_t i = 0; i < a.x.size(); ++i) {
    out.x[i] = mod(a.x[i] + b.x[i], m);
    out.y[i] = mod(a.y[i] + b.y[i], m);
  }
  return out;
}

HeisenbergElement inverse(const HeisenbergElement& a) {
  // (t,x,y)^{-1} = (-t + <x,y>, -x, -y)
  const long m = a.m;
  HeisenbergElement out{m, mod(-a.t + dot(a.x, a.y, m), m), a.x, a.y};
  for (size_t i = 0; i < a.x.size(); ++i) {
    out.x[i] = mod(-a.x[i], m);
    out.y[i] = mod(-a.y[i], m);
  }
  return out;
}

SchrodingerRep::SchrodingerRep(long m, long n, long g) : m_(m), n_(mod(n, m)), g_(g), dim_(ipow_long(m, g)) {}

MonomialMatrix SchrodingerRep::action(const HeisenbergElement& h) const {
  if (h.m != m_ || h.genus() != g_) throw std::invalid_argument("element is not in this group");
  MonomialMatrix out{m_, std::vector<long>(static_cast<size_t>(dim_)), std::vector<long>(static_cast<size_t>(dim_))};
  for (long zi = 0; zi < dim_; ++zi) {
    const auto z = digits(zi, m_, g_);
    std::vector<long> zx(z);
    for (long i = 0; i < g_; ++i) zx[static_cast<size_t>(i)] += h.x[static_cast<size_t>(i)];
    out.column[static_cast<size_t>(zi)] = undigits(zx, m_);
    out.power[static_cast<size_t>(zi)] = mod(n_ * (h.t + dot(h.y, z, m_)), m_);
  }
  return out;
}

std::vector<std::vector<CycNum>> SchrodingerRep::matrix(const HeisenbergElement& h) const {
  const MonomialMatrix M = action(h);
  std::vector<std::vector<CycNum>> out(static_cast<size_t>(dim_), std::vector<CycNum>(static_cast<size_t>(dim_), CycNum(m_)));
  for (long z = 0; z < dim_; ++z)
    out[static_cast<size_t>(z)][static_cast<size_t>(M.column[static_cast<size_t>(z)])] =
        CycNum::zeta(m_, M.power[static_cast<size_t>(z)]);
  return out;
}

CycNum SchrodingerRep::character(const HeisenbergElement& h) const {
  const MonomialMatrix M = action(h);
  std::vector<BigInt> counts(static_cast<size_t>(m_), 0);
  for (long z = 0; z < dim_; ++z)
    if (M.column[static_cast<size_t>(z)] == z) ++counts[static_cast<size_t>(M.power[static_cast<size_t>(z)])];
  return CycNum::from_power_counts(m_, counts);
}

SchrodingerRep schrodinger_rep(long m, long n, long g) {
  require_odd_modulus(m);
  if (g < 1) throw HypothesisError("genus must be >= 1");
  if (std::gcd(m, mod(n, m)) != 1)
    throw HypothesisError("central weight n must be prime to m (got gcd(" + std::to_string(m) + ", " +
                          std::to_string(n) + ") != 1)");
  SchrodingerRep rep(m, n, g);
  const auto gens = generators(m, g);
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (!(rep.action(multiply(a, b)) == compose(rep.action(a), rep.action(b))))
        throw ConsistencyError("Schrodinger model fails the homomorphism property on generators");
  const MonomialMatrix c = rep.action(gens[0]);
  for (long z = 0; z < rep.dimension(); ++z)
    if (c.column[static_cast<size_t>(z)] != z || c.power[static_cast<size_t>(z)] != mod(n, m))
      throw ConsistencyError("center does not act by the prescribed character");
  return rep;
}

bool check_schrodinger_irreducible(const SchrodingerRep& rep) {
  const long m = rep.modulus(), g = rep.genus();
  const long order = ipow_long(m, 2 * g + 1);
  CycNum norm(m);
  for (long i = 0; i < order; ++i) {
    const auto h = element_at(i, m, g);
    const CycNum chi = rep.character(h);
    if (!is_central(h) && !chi.is_zero()) return false;
    if (!chi.is_zero()) norm += chi * chi.conjugate();
  }
  return extract_rational(norm) == Rational(order);
}

std::vector<IrrepClass> irrep_census(long m, long g, long budget) {
  require_odd_modulus(m);
  if (g < 1) throw HypothesisError("genus must be >= 1");
  if (std::pow(static_cast<double>(m), 2.0 * g + 1) > static_cast<double>(budget))
    throw BudgetError("group of order m^(2g+1) with m = " + std::to_string(m) + ", g = " + std::to_string(g) +
                      " exceeds the census budget of " + std::to_string(budget));
  const long order = ipow_long(m, 2 * g + 1);
  const auto gens = generators(m, g);

  // commutators with generators are central, so the group has class <= 2
  for (long i = 0; i < order; ++i)
    for (const auto& c : gens)
      if (!is_central(commutator(element_at(i, m, g), c)))
        throw ConsistencyError("commutator is not central");

  // conjugacy classes as orbits under conjugation by the generators
  std::vector<char> seen(static_cast<size_t>(order), 0);
  long classes = 0;
  std::vector<long> stack;
  for (long i = 0; i < order; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++classes;
    seen[static_cast<size_t>(i)] = 1;
    stack.push_back(i);
    while (!stack.empty()) {
      const auto h = element_at(stack.back(), m, g);
      stack.pop_back();
      for (const auto& c : gens) {
        const long j = element_index(multiply(multiply(c, h), inverse(c)));
        if (!seen[static_cast<size_t>(j)]) {
          seen[static_cast<size_t>(j)] = 1;
          stack.push_back(j);
        }
      }
    }
  }

  // For central weight n, irreducibles over zeta^{n t} are counted by the
  // points of G/Z whose commutator pairing with every generator dies under n.
  const long quotient = ipow_long(m, 2 * g);
  std::vector<IrrepClass> out;
  long total_irreps = 0, total_square = 0;
  for (long n = 0; n < m; ++n) {
    long count = 0;
    for (long q = 0; q < quotient; ++q) {
      const auto h = element_at(q * m, m, g);
      bool good = true;
      for (const auto& c : gens)
        if (mod(n * commutator(h, c).t, m) != 0) good = false;
      if (good) ++count;
    }
    const long sq = quotient / count;
    const long dim = std::lround(std::sqrt(static_cast<double>(sq)));
    if (quotient % count != 0 || dim * dim != sq)
      throw ConsistencyError("central weight " + std::to_string(n) + ": block size is not count * dim^2");
    if (std::gcd(n, m) == 1 && (count != 1 || dim != ipow_long(m, g)))
      throw ConsistencyError("unit central weight " + std::to_string(n) + " does not carry a unique m^g-dimensional irreducible");
    out.push_back({dim, n, count});
    total_irreps += count;
    total_square += count * dim * dim;
  }
  if (total_irreps != classes)
    throw ConsistencyError("irreducible count " + std::to_string(total_irreps) + " differs from class count " +
                           std::to_string(classes));
  if (total_square != order) throw ConsistencyError("sum of squared dimensions differs from the group order");
  return out;
}

}  // namespace thetakit
