#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qmstp/bound_result.hpp"
#include "qmstp/instance.hpp"

namespace qmstp {

/// Settings shared by every lower-bound method.
struct BoundOptions {
  double time_limit = 7200.0;  ///< seconds, for the LP-based methods
  std::size_t cut_batch = 0;   ///< 0 means n * m
  double cut_tol = 1e-6;
  double ax_epsilon = 1e-4;
  int ax_max_iters = 1000;
  int op_max_iters = 300;
  std::uint64_t seed = 1;  ///< heuristic seed for the subgradient target
};

/// gl ax op lbb vs0 vs0_boxed vs1 vs2 rlt1
const std::vector<std::string>& bound_methods();
bool is_bound_method(std::string_view tag);

/// Runs one method by tag. Throws InvalidArgument for unknown tags.
BoundResult compute_bound(const Instance& inst, std::string_view method, const BoundOptions& opt = {});

}  // namespace qmstp
