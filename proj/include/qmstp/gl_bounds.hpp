#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qmstp/bound_result.hpp"
#include "qmstp/instance.hpp"

namespace qmstp {

/// One pass of the Gilmore-Lawler procedure on a (possibly asymmetric) m x m
/// cost matrix c, row-major: f_e = min over trees containing e of
/// sum_{f != e} c_ef, then value = min over trees of sum_e (f_e + c_ee) x_e.
struct GlEvaluation {
  double value = 0.0;
  std::vector<double> subproblem;           ///< f_e
  std::vector<std::vector<int>> edge_trees; ///< tree attaining f_e, per e
  std::vector<int> master_tree;
};

GlEvaluation gl_procedure(const Instance& inst, std::span<const double> c);

BoundResult gl_bound(const Instance& inst);

struct AssadXuOptions {
  double epsilon_stop = 1e-4;
  int max_iters = 1000;
};

/// Leveling procedure. trace[i].bound is AX(gamma^i); value is the last one.
/// Decreases along the trace are counted in counters["decreases"].
BoundResult assad_xu(const Instance& inst, const AssadXuOptions& opt = {});

/// AX(gamma) for an arbitrary gamma.
double assad_xu_value(const Instance& inst, std::span<const double> gamma);

struct SubgradientOptions {
  int max_iters = 300;
  double step_scale = 2.0;   ///< initial theta of the Polyak step
  int patience = 10;         ///< non-improving iterations before theta is halved
  double min_step_scale = 1e-6;
  /// Target for the Polyak step; NaN means run the tabu search for one.
  double upper_bound = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 1;
};

/// Lagrangian bound with the constraints sum_{e in delta(i)} y_ef >= x_f
/// (i not an endpoint of f) dualised. Returns the best value seen.
BoundResult oncan_punnen(const Instance& inst, const SubgradientOptions& opt = {});

/// Multipliers are laid out as lambda[i * m + f]; entries with i an endpoint
/// of f are ignored.
std::vector<double> lagrangian_costs(const Instance& inst, std::span<const double> lambda);
double lagrangian_value(const Instance& inst, std::span<const double> lambda);

}  // namespace qmstp
