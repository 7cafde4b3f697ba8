#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qmstp/instance.hpp"
#include "qmstp/methods.hpp"

namespace qmstp {

struct BenchmarkRow {
  std::string instance;
  int n = 0;
  int density = 0;
  std::string method;
  double bound = std::numeric_limits<double>::quiet_NaN();
  double time_s = 0.0;
  double upper_bound = std::numeric_limits<double>::quiet_NaN();
  double gap_pct = std::numeric_limits<double>::quiet_NaN();  ///< 100 (UB - LB) / UB
  std::string status;
};

struct BenchmarkOptions {
  /// Bound method tags plus "exact" (enumeration, n <= 9).
  std::vector<std::string> methods = {"gl", "vs0"};
  BoundOptions bound;
  /// Fixed UB for every instance; otherwise tabu + VNS, or the exact optimum
  /// when "exact" is among the methods and n <= 9.
  std::optional<double> upper_bound;
  std::uint64_t heuristic_seed = 1;
  int workers = 1;
};

/// 100 (ub - lb) / ub.
double gap_percent(double ub, double lb);

/// One row per (instance, method). Errors inside a method end up in the
/// row's status ("error: ...") and the run continues. Throws InvalidArgument
/// for unknown method tags before any work is done.
std::vector<BenchmarkRow> run_benchmark(const std::vector<Instance>& instances, const BenchmarkOptions& opt);

/// CSV with header instance,n,density,method,bound,time_s,gap_pct,status.
std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);
/// One table row per instance, columns UB then bound and gap per method.
std::string benchmark_markdown(const std::vector<BenchmarkRow>& rows);

}  // namespace qmstp
