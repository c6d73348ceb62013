#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace thetakit {

/// Range configuration for the identity suites, read from plain
/// `key=value` lines. Unknown keys are rejected.
struct RangeSpec {
  long g_max = 2;
  long n_max = 6;                   // bound on r + k
  std::vector<long> h_list{1, 3, 5};
  std::vector<long> d_list{};       // empty: every admissible d

  static RangeSpec parse(std::string_view text);
  static RangeSpec load(const std::string& path);
};

struct SuiteReport {
  std::string name;
  std::string law;                  // the identity under test, in words
  long cases = 0;
  long skipped = 0;                 // out of the computational budget
  std::vector<std::string> lines;   // exact values, fixed order
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs every suite over the range. Cases are spread over the library's
/// worker threads, but all output is ordered by case, never by completion.
std::vector<SuiteReport> run_identities(const RangeSpec& spec);

}  // namespace thetakit
