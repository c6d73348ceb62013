#include "thetakit/identities.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "thetakit/arith.hpp"
#include "thetakit/chern.hpp"
#include "thetakit/cyclotomic.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/heisenberg.hpp"
#include "thetakit/parallel.hpp"
#include "thetakit/pgl.hpp"
#include "thetakit/splitting.hpp"
#include "thetakit/torsion.hpp"
#include "thetakit/verlinde.hpp"

namespace thetakit {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long parse_long(const std::string& key, std::string_view v) {
  long out = 0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) throw HypothesisError("range spec: " + key + " expects an integer, got '" + std::string(v) + "'");
  return out;
}

std::vector<long> parse_list(const std::string& key, std::string_view v) {
  std::vector<long> out;
  std::string item;
  std::stringstream ss{std::string(v)};
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(parse_long(key, t));
  }
  return out;
}

std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

std::string S(long v) { return std::to_string(v); }

// One case of a suite: exact output lines plus failures.
struct Outcome {
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  bool skipped = false;
};

using Case = std::function<Outcome()>;

SuiteReport run_suite(std::string name, std::string law, const std::vector<Case>& cases) {
  SuiteReport rep;
  rep.name = std::move(name);
  rep.law = std::move(law);
  auto results = parallel_map(cases.size(), [&](std::size_t i) {
    try {
      return cases[i]();
    } catch (const BudgetError&) {
      Outcome o;
      o.skipped = true;
      return o;
    } catch (const std::exception& e) {
      Outcome o;
      o.failures.push_back(std::string("error: ") + e.what());
      return o;
    }
  });
  for (auto& o : results) {
    ++rep.cases;
    if (o.skipped) {
      ++rep.skipped;
      continue;
    }
    for (auto& l : o.lines) rep.lines.push_back(std::move(l));
    for (auto& f : o.failures) rep.failures.push_back(rep.law + " fails: " + f);
  }
  return rep;
}

bool multiplicity_feasible(const SplitQuery& q) {
  for (long d : divisors(q.h))
    if (!v_number_feasible(trace_term(q, d).v)) return false;
  return true;
}

Outcome skipped() {
  Outcome o;
  o.skipped = true;
  return o;
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.failures.push_back(what);
}

// --- suites ---

SuiteReport symmetry(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long g = 1; g <= s.g_max; ++g)
    for (long r = 1; r < s.n_max; ++r)
      for (long k = 1; r + k <= s.n_max; ++k)
        cases.push_back([=] {
          if (!v_number_feasible({g, r, k})) return skipped();
          Outcome o;
          const Rational a = v_number({g, r, k}), b = v_number({g, k, r});
          const BigInt dim = verlinde_dim({g, r, k});
          o.lines.push_back(join({"dim", S(g), S(r), S(k), dim.get_str()}));
          expect(o, a == b, "v_" + S(g) + "(" + S(r) + "," + S(k) + ") = " + a.to_string() + " but swapped gives " + b.to_string());
          expect(o, dim > 0, "dimension at g=" + S(g) + " r=" + S(r) + " k=" + S(k) + " is not positive");
          return o;
        });
  return run_suite("symmetry", "level-rank symmetry v_g(r,k) = v_g(k,r) with positive integral dimension", cases);
}

SuiteReport genus_one(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long r = 1; r < s.n_max; ++r)
    for (long k = 1; r + k <= s.n_max; ++k)
      cases.push_back([=] {
        Outcome o;
        const Rational v = v_number({1, r, k});
        o.lines.push_back(join({"v1", S(r), S(k), v.to_string()}));
        expect(o, v == Rational(binomial(r + k, r)), "v_1(" + S(r) + "," + S(k) + ") = " + v.to_string());
        return o;
      });
  return run_suite("genus-one", "genus-one value v_1(r,k) = C(r+k, r)", cases);
}

SuiteReport trace_identity(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long h : s.h_list)
    for (long g = 1; g <= s.g_max; ++g)
      for (long r = 1; r < s.n_max; ++r)
        for (long k = 1; r + k <= s.n_max; ++k)
          cases.push_back([=] {
            const SplitQuery q{g, r, k, h};
            q.validate_trace();
            if (!v_number_feasible({g, h * r, h * k})) return skipped();
            Outcome o;
            const Rational t = trace_of_torsion(q, 1).value;
            o.lines.push_back(join({"trace", S(g), S(r), S(k), S(h), t.to_string()}));
            expect(o, t == Rational(verlinde_dim({g, h * r, h * k})),
                   "trace at the identity for g=" + S(g) + " r=" + S(r) + " k=" + S(k) + " h=" + S(h));
            return o;
          });
  return run_suite("trace-identity", "trace at the identity equals the level-hk rank-hr dimension", cases);
}

// (h, g, r, k) with the splitting hypotheses in force.
std::vector<SplitQuery> split_queries(const RangeSpec& s) {
  std::vector<SplitQuery> out;
  for (long h : s.h_list) {
    if (h < 1 || h % 2 == 0) continue;
    for (long g = 1; g <= s.g_max; ++g)
      for (long r = 1; r < s.n_max; ++r)
        for (long k = 1; r + k <= s.n_max; ++k)
          if (std::gcd(r, k) == 1) out.push_back({g, r, k, h});
  }
  return out;
}

SuiteReport multiplicities(const RangeSpec& s) {
  std::vector<Case> cases;
  for (const auto& q : split_queries(s))
    cases.push_back([=] {
      if (!multiplicity_feasible(q)) return skipped();
      Outcome o;
      for (long omega : divisors(q.h)) {
        const BigInt m = multiplicity(q, omega);
        o.lines.push_back(join({"mult", S(q.g), S(q.r), S(q.k), S(q.h), S(omega), m.get_str()}));
        for (const auto& xi : sample_characters(q.h, omega, q.g, 2))
          expect(o, multiplicity_oracle(q, xi) == Rational(m),
                 "closed multiplicity " + m.get_str() + " vs Fourier inversion at g=" + S(q.g) + " r=" + S(q.r) +
                     " k=" + S(q.k) + " h=" + S(q.h) + " omega=" + S(omega));
      }
      return o;
    });
  return run_suite("multiplicity", "closed multiplicity formula equals Fourier inversion of traces", cases);
}

SuiteReport rank_consistency(const RangeSpec& s) {
  std::vector<Case> cases;
  for (const auto& q : split_queries(s))
    cases.push_back([=] {
      if (!multiplicity_feasible(q)) return skipped();
      Outcome o;
      const bool a = check_rank_consistency(q, false), b = check_rank_consistency(q, true);
      o.lines.push_back(join({"rank", S(q.g), S(q.r), S(q.k), S(q.h), a && b ? "ok" : "mismatch"}));
      expect(o, a && b, "sum of multiplicities times class sizes at g=" + S(q.g) + " r=" + S(q.r) + " k=" + S(q.k) + " h=" + S(q.h));
      return o;
    });
  return run_suite("rank", "multiplicities reproduce the rank of the pushed-forward bundle", cases);
}

SuiteReport character_sums(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long h : s.h_list)
    for (long g = 1; g <= std::min(s.g_max, 2L); ++g) {
      if (h < 1) continue;
      for (long omega : divisors(h))
        for (long delta : divisors(h))
          cases.push_back([=] {
            if (ipow(BigInt(h), static_cast<unsigned long>(2 * g)) > BigInt(200000)) return skipped();
            Outcome o;
            const auto xis = sample_characters(h, omega, g, 1);
            const Rational closed = character_order_sum_closed(h, omega, delta, g);
            o.lines.push_back(join({"charsum", S(h), S(g), S(omega), S(delta), closed.to_string()}));
            for (const auto& xi : xis)
              expect(o, extract_rational(character_order_sum_brute(xi, delta)) == closed,
                     "h=" + S(h) + " g=" + S(g) + " omega=" + S(omega) + " delta=" + S(delta));
            return o;
          });
    }
  return run_suite("character-sum", "character sum over points of fixed order equals the totient-symbol closed form", cases);
}

SuiteReport torsion_partition(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long g = 1; g <= std::min(s.g_max, 3L); ++g)
    for (long m = 1; m <= 30; ++m)
      cases.push_back([=] {
        Outcome o;
        const bool ok = check_count_partition(m, g);
        o.lines.push_back(join({"partition", S(m), S(g), ok ? "ok" : "mismatch"}));
        expect(o, ok, "sum over d | m of points of order d is not m^{2g} at m=" + S(m) + " g=" + S(g));
        return o;
      });
  return run_suite("torsion-partition", "points of each order partition the m-torsion", cases);
}

SuiteReport pgl_routes(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long g = 1; g <= s.g_max; ++g)
    for (long r = 1; r < s.n_max; r += 2)
      for (long k = 1; r + k <= s.n_max; ++k)
        for (long d : divisors(std::gcd(r, k))) {
          if (!s.d_list.empty() && std::find(s.d_list.begin(), s.d_list.end(), d) == s.d_list.end()) continue;
          cases.push_back([=] {
            if (!v_number_feasible({g, r, k})) return skipped();
            Outcome o;
            const Rational a = pgl_dim_charsum({g, r, k, d}), b = pgl_dim_coperiodic({g, r, k, d});
            o.lines.push_back(join({"pgl", S(g), S(r), S(k), S(d), a.to_string(), b.to_string()}));
            expect(o, a == b, "character route " + a.to_string() + " vs coperiodic route " + b.to_string() + " at g=" + S(g) +
                                  " r=" + S(r) + " k=" + S(k) + " d=" + S(d));
            expect(o, b.is_integer() && b.sign() >= 0, "dimension " + b.to_string() + " is not a nonnegative integer");
            return o;
          });
        }
  return run_suite("pgl", "character-average and coperiodic formulas for SL_r/Z_d agree", cases);
}

SuiteReport sines(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long delta = 1; delta <= 6; ++delta)
    cases.push_back([=] {
      Outcome o;
      long checked = 0;
      for (long den = 1; den <= 12; ++den)
        for (long num = 0; num < den; ++num) {
          const Rational x(num, den);
          if ((x * Rational(delta)).is_integer()) continue;
          ++checked;
          expect(o, check_sine_identity(delta, x), "delta=" + S(delta) + " x=" + x.to_string());
        }
      o.lines.push_back(join({"sine", S(delta), S(checked)}));
      return o;
    });
  for (long n = 2; n <= s.n_max; ++n)
    cases.push_back([=] {
      Outcome o;
      long checked = 0;
      for (long r = 1; r < n; ++r)
        subsets::for_each(n, r, [&](std::uint64_t m) {
          const SubsetS set = subsets::to_subset(m, n);
          for (long delta : divisors(coperiod(set, r, n - r))) {
            ++checked;
            expect(o, check_coperiodic_product(set, r, n - r, delta), "coperiodic product at n=" + S(n) + " delta=" + S(delta));
          }
        });
      o.lines.push_back(join({"coperiodic", S(n), S(checked)}));
      return o;
    });
  return run_suite("sine", "product-of-sines identities", cases);
}

SuiteReport chern(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long g = 1; g <= s.g_max; ++g)
    for (long a = 1; a <= 9; a += 2)
      for (long b = 1; b <= 9; b += 2)
        cases.push_back([=] {
          Outcome o;
          const auto G = static_cast<unsigned long>(g);
          const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
          const SlopeClass w = SlopeClass::semihomogeneous(a, b, g);
          const SlopeClass f = fm_transform(w);
          expect(o, euler_char(w) == Rational(ipow(BigInt(b), G)), "euler characteristic of W_{a,b}");
          expect(o, f == fm_transform_semihomogeneous(a, b, g) && f.rank == Rational(ipow(BigInt(b), G)) &&
                        f.slope == Rational(-a, b),
                 "transform of W_{a,b}");
          const SlopeClass ff = fm_transform(f);
          expect(o, ff.rank == sign * w.rank && ff.slope == w.slope, "transform squared");
          const SlopeClass p = pullback_semihomogeneous(a, b, g);
          expect(o, p.rank == Rational(ipow(BigInt(a), G)) && p.slope == Rational(a * b), "pullback by multiplication by a");
          expect(o, check_wirtinger_matrix(a, b, g), "Wirtinger matrix diag(a(a+b), b(a+b))");
          expect(o, check_sum_map_bookkeeping(a, b, g), "sum-map bookkeeping");
          if (std::gcd(a, b) == 1) expect(o, check_wirtinger_dims(a, b, g), "dimension equality (a+b)^g");
          for (long c = 1; c <= 9; c += 2)
            for (long d = 1; d <= 9; d += 2)
              expect(o, check_wirtinger_matrix_general(a, b, c, d, g), "general Wirtinger matrix");
          o.lines.push_back(join({"chern", S(g), S(a), S(b), f.rank.to_string(), f.slope.to_string(), o.failures.empty() ? "ok" : "mismatch"}));
          for (auto& fl : o.failures) fl += " at g=" + S(g) + " a=" + S(a) + " b=" + S(b);
          return o;
        });
  return run_suite("chern", "slope calculus of semihomogeneous bundles", cases);
}

SuiteReport heisenberg(const RangeSpec& s) {
  std::vector<Case> cases;
  for (long m : {3L, 5L})
    cases.push_back([=] {
      Outcome o;
      const auto census = irrep_census(m, 1);
      long squares = 0;
      for (const auto& c : census) {
        o.lines.push_back(join({"census", S(m), S(c.central_weight), S(c.dimension), S(c.multiplicity)}));
        squares += c.multiplicity * c.dimension * c.dimension;
      }
      expect(o, squares == m * m * m, "sum of squared dimensions at m=" + S(m));
      return o;
    });
  for (long m : {3L, 5L, 9L})
    for (long g = 1; g <= std::min(s.g_max, 2L); ++g)
      for (long n = 1; n < m; ++n) {
        if (std::gcd(m, n) != 1) continue;
        cases.push_back([=] {
          Outcome o;
          const bool ok = check_schrodinger_irreducible(schrodinger_rep(m, n, g));
          o.lines.push_back(join({"schrodinger", S(m), S(n), S(g), ok ? "irreducible" : "reducible"}));
          expect(o, ok, "character norm of the Schrodinger representation m=" + S(m) + " n=" + S(n) + " g=" + S(g));
          return o;
        });
      }
  return run_suite("heisenberg", "irreducible census of the finite Heisenberg group", cases);
}

}  // namespace

RangeSpec RangeSpec::parse(std::string_view text) {
  RangeSpec spec;
  std::stringstream in{std::string(text)};
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw HypothesisError("range spec line " + S(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string val = trim(std::string_view(t).substr(eq + 1));
    if (key == "g_max") spec.g_max = parse_long(key, val);
    else if (key == "n_max") spec.n_max = parse_long(key, val);
    else if (key == "h_list") spec.h_list = parse_list(key, val);
    else if (key == "d_list") spec.d_list = parse_list(key, val);
    else throw HypothesisError("range spec line " + S(lineno) + ": unknown key '" + key + "'");
  }
  if (spec.g_max < 1) throw HypothesisError("range spec: g_max must be >= 1");
  if (spec.n_max < 2) throw HypothesisError("range spec: n_max must be >= 2");
  for (long h : spec.h_list)
    if (h < 1 || h % 2 == 0) throw HypothesisError("range spec: h_list entries must be odd and positive");
  for (long d : spec.d_list)
    if (d < 1) throw HypothesisError("range spec: d_list entries must be positive");
  return spec;
}

RangeSpec RangeSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HypothesisError("cannot read range spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<SuiteReport> run_identities(const RangeSpec& spec) {
  std::vector<SuiteReport> out;
  out.push_back(symmetry(spec));
  out.push_back(genus_one(spec));
  out.push_back(trace_identity(spec));
  out.push_back(multiplicities(spec));
  out.push_back(rank_consistency(spec));
  out.push_back(character_sums(spec));
  out.push_back(torsion_partition(spec));
  out.push_back(pgl_routes(spec));
  out.push_back(sines(spec));
  out.push_back(chern(spec));
  out.push_back(heisenberg(spec));
  return out;
}

}  // namespace thetakit
