#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmstp/instance.hpp"

namespace qmstp {

enum class Verdict { Pass, Fail, Skip };

struct Check {
  std::string name;
  Verdict verdict = Verdict::Skip;
  std::string detail;
};

struct VerifyOptions {
  double tol = 1e-6;
  int oracle_limit_n = 9;  ///< enumeration-backed checks above this n are skipped
  double time_limit = 600.0;
  std::uint64_t seed = 1;
};

/// Cross-module invariant suite on one instance: bound chain, oracle
/// comparisons, LBB = VS0 on complete graphs, tree points feasible in the
/// relaxation models, cutting-plane trace and pool audits, LP certificates.
/// Resets the process-wide LP certificate audit.
std::vector<Check> verify(const Instance& inst, const VerifyOptions& opt = {});

bool all_passed(const std::vector<Check>& checks);
const char* verdict_name(Verdict v);
/// "[PASS] name: detail" lines.
std::string format_checks(const std::vector<Check>& checks);

}  // namespace qmstp
