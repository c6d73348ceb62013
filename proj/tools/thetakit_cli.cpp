// thetakit command-line front end.
//
// stdout carries data in the chosen format, stderr carries errors and the
// elapsed time (kept off stdout so that output is byte-stable).
// Exit codes: 0 ok, 1 hypothesis violated, 2 an identity failed,
// 3 usage error or computation out of budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thetakit/arith.hpp"
#include "thetakit/chern.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/heisenberg.hpp"
#include "thetakit/identities.hpp"
#include "thetakit/parallel.hpp"
#include "thetakit/pgl.hpp"
#include "thetakit/splitting.hpp"
#include "thetakit/torsion.hpp"
#include "thetakit/verlinde.hpp"

using namespace thetakit;
using json = nlohmann::ordered_json;

namespace {

enum class Format { Plain, Json, Csv, Latex };

// One query's output: parameters plus a table of exact strings.
struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> query;
  std::string mode = "exact";
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_cell(const std::string& s) {
  // fractions a/b become \frac{a}{b}; everything else is escaped
  if (auto slash = s.find('/'); slash != std::string::npos && s.find(' ') == std::string::npos)
    return "$\\frac{" + s.substr(0, slash) + "}{" + s.substr(slash + 1) + "}$";
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

void emit(const Record& rec, Format f, std::ostream& os) {
  switch (f) {
    case Format::Plain: {
      os << rec.command;
      for (const auto& [k, v] : rec.query) os << ' ' << k << '=' << v;
      os << " (" << rec.mode << ")\n";
      if (rec.rows.size() == 1 && rec.columns.size() == 1) {
        os << rec.rows[0][0] << '\n';
      } else {
        std::vector<std::size_t> width(rec.columns.size());
        for (std::size_t c = 0; c < rec.columns.size(); ++c) {
          width[c] = rec.columns[c].size();
          for (const auto& r : rec.rows) width[c] = std::max(width[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
          for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << cells[c];
            if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size(), ' ');
          }
          os << '\n';
        };
        line(rec.columns);
        for (const auto& r : rec.rows) line(r);
      }
      for (const auto& [k, v] : rec.summary) os << k << ": " << v << '\n';
      break;
    }
    case Format::Json: {
      json j;
      j["command"] = rec.command;
      j["query"] = json::object();
      for (const auto& [k, v] : rec.query) j["query"][k] = v;
      j["mode"] = rec.mode;
      j["rows"] = json::array();
      for (const auto& r : rec.rows) {
        json row = json::object();
        for (std::size_t c = 0; c < r.size(); ++c) row[rec.columns[c]] = r[c];
        j["rows"].push_back(row);
      }
      for (const auto& [k, v] : rec.summary) j[k] = v;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
        os << '\n';
      };
      std::vector<std::string> head, tail;
      for (const auto& [k, v] : rec.query) {
        head.push_back(k);
        tail.push_back(v);
      }
      for (const auto& c : rec.columns) head.push_back(c);
      line(head);
      for (const auto& r : rec.rows) {
        std::vector<std::string> cells = tail;
        cells.insert(cells.end(), r.begin(), r.end());
        line(cells);
      }
      for (const auto& [k, v] : rec.summary) os << "# " << k << "=" << v << '\n';
      break;
    }
    case Format::Latex: {
      os << "% " << rec.command;
      for (const auto& [k, v] : rec.query) os << ' ' << k << '=' << v;
      os << "\n\\begin{tabular}{" << std::string(rec.columns.size(), 'r') << "}\n";
      for (std::size_t c = 0; c < rec.columns.size(); ++c) os << (c ? " & " : "") << latex_cell(rec.columns[c]);
      os << " \\\\\n\\hline\n";
      for (const auto& r : rec.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? " & " : "") << latex_cell(r[c]);
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      for (const auto& [k, v] : rec.summary) os << "% " << k << ": " << v << '\n';
      break;
    }
  }
}

std::string S(long v) { return std::to_string(v); }

Rational slope_factor(long r, long k, long g) {
  return Rational(ipow(BigInt(r), static_cast<unsigned long>(g)), ipow(BigInt(r + k), static_cast<unsigned long>(g)));
}

struct Opts {
  long genus = 1, rank = 1, level = 1, h = 1, d = 1, order = 1, lambda = 0, modulus = 3;
  std::string rank_q = "1", slope = "1";
  std::string format = "plain", mode = "exact";
  unsigned threads = 1;
  std::string range_spec;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verlinde numbers, torsion traces, splittings and slope calculus, computed exactly"};
  app.set_help_flag("--help", "Print help and exit");  // -h would clash with --h
  app.require_subcommand(1);
  Opts o;
  std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}, {"latex", Format::Latex}};
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv", "latex"}));
  app.add_option("--mode", o.mode, "Exact values or a floating cross-check")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.fallthrough();

  auto add = [&](CLI::App* sub, std::initializer_list<const char*> which) {
    for (std::string w : which) {
      if (w == "genus") sub->add_option("--genus,-g", o.genus, "Genus g >= 1");
      if (w == "rank") sub->add_option("--rank,-r", o.rank, "Rank r >= 1");
      if (w == "level") sub->add_option("--level,-k", o.level, "Level k >= 1");
      if (w == "h") sub->add_option("--h", o.h, "Torsion order h (odd)");
      if (w == "d") sub->add_option("--d", o.d, "Order d of the central subgroup, d | gcd(r, k)");
      if (w == "order") sub->add_option("--order", o.order, "Order of the torsion point or character");
      if (w == "lambda") sub->add_option("--lambda", o.lambda, "Integer argument of the symbol");
    }
  };

  auto* v = app.add_subcommand("v", "Verlinde number v_g(r,k)");
  add(v, {"genus", "rank", "level"});
  auto* dim = app.add_subcommand("dim", "Dimension of level-k theta functions on SU(r)");
  add(dim, {"genus", "rank", "level"});
  auto* symbol = app.add_subcommand("symbol", "Genus-g totient symbol {lambda/h}_g");
  add(symbol, {"genus", "h", "lambda"});
  auto* trace = app.add_subcommand("trace", "Trace of a torsion point of order --order on the Verlinde bundle");
  add(trace, {"genus", "rank", "level", "h", "order"});
  auto* split = app.add_subcommand("split", "Multiplicities of every character order in the Verlinde bundle");
  add(split, {"genus", "rank", "level", "h"});
  auto* pgl = app.add_subcommand("pgl", "Dimension for SL_r/Z_d by both routes");
  add(pgl, {"genus", "rank", "level", "d"});
  auto* fm = app.add_subcommand("fm", "Fourier-Mukai transform of a slope class");
  fm->add_option("--genus,-g", o.genus, "Genus g >= 1");
  fm->add_option("--rank,-r", o.rank_q, "Rank (a rational, e.g. 9 or 3/2)");
  fm->add_option("--slope", o.slope, "Slope (nonzero rational)");
  auto* heis = app.add_subcommand("heisenberg", "Finite Heisenberg groups");
  heis->require_subcommand(1);
  auto* census = heis->add_subcommand("census", "Irreducible representations grouped by central character");
  census->add_option("--modulus,-m", o.modulus, "Odd modulus m");
  census->add_option("--genus,-g", o.genus, "Genus g >= 1");
  auto* ident = app.add_subcommand("identities", "Run every identity suite over a range");
  ident->add_option("--range-spec", o.range_spec, "File of key=value lines: g_max, n_max, h_list, d_list")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  set_thread_count(o.threads);
  const Format fmt = formats.at(o.format);
  const bool exact = o.mode == "exact";
  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;

  try {
    Record rec;
    rec.mode = o.mode;
    const auto gkr = [&] {
      rec.query = {{"genus", S(o.genus)}, {"rank", S(o.rank)}, {"level", S(o.level)}};
    };
    if (*v) {
      rec.command = "v";
      gkr();
      rec.columns = {"v"};
      const VerlindeQuery q{o.genus, o.rank, o.level};
      rec.rows.push_back({exact ? v_number(q).to_string() : v_number_float(q).to_string()});
    } else if (*dim) {
      rec.command = "dim";
      gkr();
      rec.columns = {"dim"};
      const VerlindeQuery q{o.genus, o.rank, o.level};
      if (exact) {
        rec.rows.push_back({verlinde_dim(q).get_str()});
      } else {
        const Real f = v_number_float(q) * Real(slope_factor(o.rank, o.level, o.genus), kDefaultFloatBits);
        rec.rows.push_back({f.to_string()});
      }
    } else if (*symbol) {
      rec.command = "symbol";
      rec.query = {{"genus", S(o.genus)}, {"h", S(o.h)}, {"lambda", S(o.lambda)}};
      rec.columns = {"symbol"};
      rec.rows.push_back({totient_symbol({o.lambda, o.h, o.genus}).to_string()});
    } else if (*trace) {
      rec.command = "trace";
      gkr();
      rec.query.push_back({"h", S(o.h)});
      rec.query.push_back({"order", S(o.order)});
      rec.columns = {"trace"};
      const SplitQuery q{o.genus, o.rank, o.level, o.h};
      rec.rows.push_back({exact ? trace_of_torsion(q, o.order).value.to_string() : trace_of_torsion_float(q, o.order).to_string()});
    } else if (*split) {
      rec.command = "split";
      gkr();
      rec.query.push_back({"h", S(o.h)});
      rec.columns = {"omega", "characters", "multiplicity"};
      const SplitQuery q{o.genus, o.rank, o.level, o.h};
      q.validate_multiplicity();
      BigInt total = 0;
      for (long omega : divisors(o.h)) {
        const BigInt count = count_order(o.h, omega, o.genus);
        if (exact) {
          const BigInt m = multiplicity(q, omega);
          total += count * m;
          rec.rows.push_back({S(omega), count.get_str(), m.get_str()});
        } else {
          rec.rows.push_back({S(omega), count.get_str(), multiplicity_float(q, omega).to_string()});
        }
      }
      if (exact) {
        const BigInt expected = verlinde_dim({o.genus, o.h * o.rank, o.h * o.level});
        rec.summary = {{"total_rank", total.get_str()}, {"rank_check", total == expected ? "true" : "false"}};
        if (total != expected) rc = 2;
      }
    } else if (*pgl) {
      rec.command = "pgl";
      gkr();
      rec.query.push_back({"d", S(o.d)});
      rec.columns = {"charsum", "coperiodic", "agree"};
      const PglQuery q{o.genus, o.rank, o.level, o.d};
      const Rational a = pgl_dim_charsum(q), b = pgl_dim_coperiodic(q);
      rec.rows.push_back({a.to_string(), b.to_string(), a == b ? "true" : "false"});
      if (a != b) rc = 2;
    } else if (*fm) {
      rec.command = "fm";
      rec.query = {{"genus", S(o.genus)}, {"rank", o.rank_q}, {"slope", o.slope}};
      rec.columns = {"rank", "slope", "euler_char"};
      const SlopeClass c = SlopeClass::bundle(o.genus, Rational::parse(o.rank_q), Rational::parse(o.slope));
      const SlopeClass f = fm_transform(c);
      rec.rows.push_back({f.rank.to_string(), f.slope.to_string(), euler_char(f).to_string()});
    } else if (*census) {
      rec.command = "heisenberg census";
      rec.query = {{"modulus", S(o.modulus)}, {"genus", S(o.genus)}};
      rec.columns = {"central_weight", "dimension", "count"};
      long squares = 0;
      for (const auto& c : irrep_census(o.modulus, o.genus)) {
        rec.rows.push_back({S(c.central_weight), S(c.dimension), S(c.multiplicity)});
        squares += c.multiplicity * c.dimension * c.dimension;
      }
      rec.summary = {{"group_order", S(squares)}};
    } else if (*ident) {
      const RangeSpec spec = o.range_spec.empty() ? RangeSpec{} : RangeSpec::load(o.range_spec);
      const auto reports = run_identities(spec);
      bool ok = true;
      if (fmt == Format::Json) {
        json j = json::array();
        for (const auto& r : reports)
          j.push_back({{"suite", r.name}, {"law", r.law}, {"passed", r.passed()}, {"cases", r.cases}, {"skipped", r.skipped},
                       {"values", r.lines}, {"failures", r.failures}});
        std::cout << j.dump(2) << '\n';
      } else {
        Record all;
        all.command = "identities";
        all.columns = {"suite", "value"};
        for (const auto& r : reports)
          for (const auto& l : r.lines) all.rows.push_back({r.name, l});
        for (const auto& r : reports)
          all.summary.push_back({r.name, std::string(r.passed() ? "pass" : "FAIL") + " cases=" + S(r.cases) + " skipped=" + S(r.skipped)});
        emit(all, fmt, std::cout);
      }
      for (const auto& r : reports) {
        ok = ok && r.passed();
        for (const auto& f : r.failures) std::cerr << r.name << ": " << f << '\n';
      }
      rc = ok ? 0 : 2;
      rec.command.clear();
    }
    if (!rec.command.empty()) emit(rec, fmt, std::cout);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "out of budget: " << e.what() << '\n';
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "elapsed_ms: " << static_cast<long long>(ms) << '\n';
  return rc;
}
