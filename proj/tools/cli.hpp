#ifndef POLYDEC_TOOLS_CLI_HPP
#define POLYDEC_TOOLS_CLI_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "polydec/field.hpp"

namespace polydec::cli {

/// Entry point shared by the binary and the test suite. `args` excludes the
/// program name. Machine-readable output goes to `out` (JSON when --json is
/// set); logs and errors go to `err`.
///
/// Exit codes: 0 success (decompose: verified; verify: equal),
/// 1 usage/parse error, 2 honest pipeline failure / mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct BenchPoint {
  int n = 0;
  std::map<std::string, double> stage_ms;
  double total_ms = 0;  // sum of stage timings (accounting identity)
  double wall_ms = 0;
  bool verified = false;
};

/// Times the full pipeline on one seeded instance per n.
std::vector<BenchPoint> run_bench(const FieldCtx& ctx,
                                  const std::vector<int>& n_list,
                                  std::uint64_t seed, int reps);

/// Least-squares slope of log(total_ms) against log(n).
double loglog_slope(const std::vector<BenchPoint>& points);

}  // namespace polydec::cli

#endif
