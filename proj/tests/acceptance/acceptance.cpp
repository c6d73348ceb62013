// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// checked against each criterion's time bound. Exit status 0 iff all pass.
//
//   acceptance --cli <path to thetakit> [--only 3,5]

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

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

using namespace thetakit;

namespace {

// "Instant" criteria get this bound.
constexpr double kInstant = 2.0;

struct Check {
  long failures = 0;
  long checks = 0;
  std::string first;

  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

std::string S(long v) { return std::to_string(v); }

Check c1() {
  Check c;
  for (long g = 1; g <= 4; ++g)
    for (long r = 1; r < 10; ++r)
      for (long k = 1; r + k <= 10; ++k) {
        const Rational a = v_number({g, r, k}), b = v_number({g, k, r});
        c(a == b, "asymmetric at g=" + S(g) + " r=" + S(r) + " k=" + S(k));
        const Rational dim = a * Rational(ipow(BigInt(r), static_cast<unsigned long>(g)),
                                          ipow(BigInt(r + k), static_cast<unsigned long>(g)));
        c(dim.is_integer() && dim.sign() > 0, "dimension not a positive integer at g=" + S(g) + " r=" + S(r) + " k=" + S(k));
      }
  return c;
}

Check c2() {
  Check c;
  for (long r = 1; r < 16; ++r)
    for (long k = 1; r + k <= 16; ++k)
      c(v_number({1, r, k}) == Rational(binomial(r + k, r)), "v_1(" + S(r) + "," + S(k) + ")");
  return c;
}

Check c3() {
  Check c;
  c(verlinde_dim({2, 2, 1}) == 4, "dim(2,2,1)");
  c(verlinde_dim({1, 2, 1}) == 2, "dim(1,2,1)");
  return c;
}

Check c4() {
  Check c;
  for (long g = 1; g <= 3; ++g)
    for (long h : {1L, 3L, 5L})
      for (long r = 1; r < 6; ++r)
        for (long k = 1; r + k <= 6; ++k)
          c(trace_of_torsion({g, r, k, h}, 1).value == Rational(verlinde_dim({g, h * r, h * k})),
            "g=" + S(g) + " r=" + S(r) + " k=" + S(k) + " h=" + S(h));
  return c;
}

// (g, r, k, h) of criteria 5 and 7
std::vector<SplitQuery> split_range() {
  std::vector<SplitQuery> out;
  const std::array<std::pair<long, long>, 5> rk{{{1, 1}, {1, 2}, {2, 1}, {1, 4}, {3, 2}}};
  for (long h : {1L, 3L, 5L, 9L})
    for (long g : {1L, 2L})
      for (auto [r, k] : rk) out.push_back({g, r, k, h});
  return out;
}

Check c5() {
  Check c;
  for (const auto& q : split_range())
    for (long omega : divisors(q.h)) {
      const Rational closed(multiplicity(q, omega));
      const auto xis = sample_characters(q.h, omega, q.g, 2);
      c(xis.size() == (omega == 1 ? 1u : 2u), "character sample size");  // only the trivial character has order 1
      for (const auto& xi : xis)
        c(multiplicity_oracle(q, xi) == closed,
          "g=" + S(q.g) + " r=" + S(q.r) + " k=" + S(q.k) + " h=" + S(q.h) + " omega=" + S(omega));
    }
  return c;
}

Check c6() {
  Check c;
  const SplitQuery q{1, 1, 1, 3};
  const BigInt m1 = multiplicity(q, 1), m3 = multiplicity(q, 3);
  c(m1 == 2, "m_1");
  c(m3 == 1, "m_3");
  c(count_order(3, 1, 1) == 1 && count_order(3, 3, 1) == 8, "character counts 1 and 8");
  c(BigInt(1 * m1 + 8 * m3) == 10 && verlinde_dim({1, 3, 3}) == 10, "rank 10");
  c(check_rank_consistency(q, false) && check_rank_consistency(q, true), "rank check");
  return c;
}

Check c7() {
  Check c;
  for (const auto& q : split_range()) {
    const std::string at = "g=" + S(q.g) + " r=" + S(q.r) + " k=" + S(q.k) + " h=" + S(q.h);
    c(check_rank_consistency(q, false), at);
    c(check_rank_consistency(q, true), at + " pointwise");
  }
  return c;
}

Check c8() {
  Check c;
  for (long h : {3L, 5L, 9L, 15L})
    for (long g : {1L, 2L})
      for (long omega : divisors(h)) {
        const auto xis = sample_characters(h, omega, g, 1);
        c(xis.size() == 1, "no character of order " + S(omega));
        for (long delta : divisors(h))
          for (const auto& xi : xis)
            c(extract_rational(character_order_sum_brute(xi, delta)) == character_order_sum_closed(h, omega, delta, g),
              "h=" + S(h) + " g=" + S(g) + " omega=" + S(omega) + " delta=" + S(delta));
      }
  return c;
}

Check c9() {
  Check c;
  for (long g = 1; g <= 3; ++g)
    for (long m = 1; m <= 30; ++m) c(check_count_partition(m, g), "m=" + S(m) + " g=" + S(g));
  return c;
}

Check c10() {
  Check c;
  c(pgl_dim_charsum({1, 3, 3, 3}) == Rational(2) && pgl_dim_coperiodic({1, 3, 3, 3}) == Rational(2), "worked instance");
  for (long g = 1; g <= 3; ++g)
    for (long r = 1; r < 12; r += 2)
      for (long k = 1; r + k <= 12; ++k)
        for (long d : divisors(std::gcd(r, k)))
          c(pgl_dim_charsum({g, r, k, d}) == pgl_dim_coperiodic({g, r, k, d}),
            "g=" + S(g) + " r=" + S(r) + " k=" + S(k) + " d=" + S(d));
  return c;
}

Check c11() {
  Check c;
  for (long delta = 1; delta <= 6; ++delta)
    for (long den = 1; den <= 12; ++den)
      for (long num = 0; num < den; ++num) {
        const Rational x(num, den);
        if ((x * Rational(delta)).is_integer()) continue;
        c(check_sine_identity(delta, x), "delta=" + S(delta) + " x=" + x.to_string());
      }
  for (long n = 2; n <= 12; ++n)
    for (long r = 1; r < n; ++r)
      subsets::for_each(n, r, [&](std::uint64_t mask) {
        const SubsetS set = subsets::to_subset(mask, n);
        for (long delta : divisors(coperiod(set, r, n - r)))
          c(check_coperiodic_product(set, r, n - r, delta), "n=" + S(n) + " r=" + S(r) + " delta=" + S(delta));
      });
  return c;
}

Check c12() {
  Check c;
  for (long g = 1; g <= 4; ++g) {
    const auto G = static_cast<unsigned long>(g);
    const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
    for (long a = 1; a <= 9; a += 2)
      for (long b = 1; b <= 9; b += 2) {
        const std::string at = " g=" + S(g) + " a=" + S(a) + " b=" + S(b);
        const SlopeClass w = SlopeClass::semihomogeneous(a, b, g);
        c(euler_char(w) == Rational(ipow(BigInt(b), G)), "chi" + at);
        const SlopeClass f = fm_transform(w);
        // the dual of W_{b,a} has rank b^g and slope -a/b
        c(f.rank == Rational(ipow(BigInt(b), G)) && f.slope == Rational(-a, b), "transform" + at);
        const SlopeClass ff = fm_transform(f);
        c(ff.rank == sign * w.rank && ff.slope == w.slope, "transform squared" + at);
        const SlopeClass p = pullback_semihomogeneous(a, b, g);
        c(p.rank == Rational(ipow(BigInt(a), G)) && p.slope == Rational(a * b), "pullback" + at);
        c(check_wirtinger_matrix(a, b, g), "Wirtinger matrix" + at);
        if (std::gcd(a, b) == 1) c(check_wirtinger_dims(a, b, g), "dimensions" + at);
        for (long cc = 1; cc <= 9; cc += 2)
          for (long d = 1; d <= 9; d += 2)
            c(check_wirtinger_matrix_general(a, b, cc, d, g), "general matrix" + at + " c=" + S(cc) + " d=" + S(d));
      }
  }
  return c;
}

Check c13() {
  Check c;
  for (long m : {3L, 5L}) {
    long ones = 0, tops = 0, tops_count = 0, squares = 0;
    for (const auto& cl : irrep_census(m, 1)) {
      if (cl.dimension == 1) ones += cl.multiplicity;
      if (cl.dimension == m) {
        tops += cl.multiplicity;
        ++tops_count;
      }
      squares += cl.multiplicity * cl.dimension * cl.dimension;
    }
    c(ones == m * m, "linear characters m=" + S(m));
    c(tops == m - 1 && tops_count == m - 1, "Schrodinger count m=" + S(m));
    c(squares == m * m * m, "sum of squares m=" + S(m));
    for (long n = 1; n < m; ++n) c(check_schrodinger_irreducible(schrodinger_rep(m, n, 1)), "norm m=" + S(m) + " n=" + S(n));
  }
  return c;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Check c14(const std::string& cli) {
  Check c;
  if (cli.empty()) {
    c(false, "no --cli given");
    return c;
  }
  const std::string spec = "acceptance_range.txt";
  std::ofstream(spec) << "g_max=2\nn_max=6\nh_list=1,3,5\n";
  int s1 = 0, s8 = 0;
  const std::string base = "'" + cli + "' identities --range-spec " + spec + " --format json 2>/dev/null";
  const std::string one = run_capture(base + " --threads 1", s1);
  const std::string eight = run_capture(base + " --threads 8", s8);
  c(s1 == 0 && s8 == 0, "identities exit status");
  c(!one.empty() && one == eight, "outputs differ between 1 and 8 threads");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string cli;
  std::vector<int> only;
  app.add_option("--cli", cli, "Path to the thetakit executable");
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  const std::set<int> selected(only.begin(), only.end());

  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds
    std::function<Check()> run;
    bool serial = false;  // the criterion's time bound is single-threaded
  };
  const std::vector<Criterion> all{
      {1, "integrality and level-rank symmetry, g <= 4, r+k <= 10", 60, c1, true},
      {2, "genus-one binomial values, r+k <= 16", 5, c2},
      {3, "known small dimensions", kInstant, c3},
      {4, "trace at the identity, g <= 3, h in {1,3,5}, r+k <= 6", 60, c4},
      {5, "multiplicity closed form vs Fourier inversion", 300, c5},
      {6, "worked splitting g=1 r=k=1 h=3", kInstant, c6},
      {7, "rank consistency on the multiplicity range", 0, c7},
      {8, "character-sum law by brute force, h in {3,5,9,15}", 120, c8},
      {9, "orders partition the m-torsion, m <= 30, g <= 3", kInstant, c9},
      {10, "SL_r/Z_d dimension by both routes, r+k <= 12", 120, c10},
      {11, "sine identities and coperiodic products", 30, c11},
      {12, "slope calculus of semihomogeneous bundles", kInstant, c12},
      {13, "Heisenberg census m in {3,5}", 60, c13},
      {14, "identities output identical with 1 and 8 threads", 0, [&] { return c14(cli); }},
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  for (const auto& cr : all) {
    if (!selected.empty() && !selected.count(cr.id)) continue;
    set_thread_count(cr.serial ? 1 : hw);
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::string error;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = cr.limit <= 0 || secs <= cr.limit;
    const bool ok = error.empty() && c.failures == 0 && c.checks > 0 && in_time;
    if (!ok) ++failed;
    std::ostringstream line;
    line << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << "  " << cr.name << "  [" << c.checks << " checks, "
         << std::fixed;
    line.precision(2);
    line << secs << " s on " << thread_count() << (thread_count() == 1 ? " thread" : " threads");
    if (cr.limit > 0) line << " / limit " << cr.limit << " s";
    line << "]";
    if (!error.empty()) line << "  error: " << error;
    if (c.failures) line << "  " << c.failures << " failed, first: " << c.first;
    if (!in_time) line << "  over the time limit";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
