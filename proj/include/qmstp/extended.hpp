#pragma once

#include <span>
#include <vector>

#include "qmstp/bound_result.hpp"
#include "qmstp/instance.hpp"
#include "qmstp/lp/simplex.hpp"
#include "qmstp/mst.hpp"

namespace qmstp {

/// Index maps of the compact spanning-tree formulation inside a LinearProgram.
/// For every root k and every edge e = {u, v} there are two arc variables:
/// z(k, e, 0) = z_{k u v} and z(k, e, 1) = z_{k v u}. Rows:
///   sum_e x_e = n - 1
///   z_{kuv} + z_{kvu} = x_e                      for each k, e
///   sum_{j ~ i} z_{kij} <= 1 (i != k), <= 0 (i = k)  for each k, i
struct ExtendedBlock {
  int n = 0;
  int m = 0;
  int x0 = 0;
  int z0 = 0;
  int cardinality_row = 0;
  int pairing_row0 = 0;
  int degree_row0 = 0;

  int x(int e) const { return x0 + e; }
  int z(int k, int e, int dir) const { return z0 + 2 * (k * m + e) + dir; }
  int pairing_row(int k, int e) const { return pairing_row0 + k * m + e; }
  int degree_row(int k, int i) const { return degree_row0 + k * n + i; }
  int num_variables() const { return m + 2 * n * m; }
  int num_rows() const { return 1 + n * m + n * n; }
};

/// Appends the block; x_e gets cost p_e (zero if p is empty).
ExtendedBlock add_extended_block(lp::LinearProgram& lp, const Instance& inst, std::span<const double> p = {});

/// The block alone with objective p: its optimum equals the MST value.
lp::LinearProgram extended_mst_model(const Instance& inst, std::span<const double> p);

/// Values for the block's variables at a spanning tree: z_{k i j} = 1 when j
/// is i's parent in the tree rooted at k.
void set_tree_point(const ExtendedBlock& b, const Instance& inst, const SpanningTree& tree, std::vector<double>& point);

/// Linear relaxation over (x, z, y). The symmetric y is stored once per
/// unordered pair e < f and y_ee is replaced by x_e, so the objective reads
/// sum_e q_ee x_e + 2 sum_{e<f} q_ef y_ef and each row
/// sum_f y_ef = (n-1) x_e becomes sum_{f != e} y_ef - (n-2) x_e = 0.
struct QuadraticModel {
  lp::LinearProgram lp;
  ExtendedBlock block;
  int m = 0;
  int y0 = 0;
  int row_sum0 = 0;

  int x(int e) const { return block.x(e); }
  /// Variable of y_ef for e != f.
  int y(int e, int f) const;
};

/// The VS0 relaxation: extended block, row sums, y >= 0. With
/// y_upper_bounds the y variables are also capped at 1; that cap is not
/// implied by the other rows (y_ef can reach n - 2), so the boxed model can be
/// strictly stronger. The uncapped model is the one whose optimum equals the
/// linearization bound on complete graphs.
QuadraticModel build_vs0_model(const Instance& inst, bool y_upper_bounds = false);

/// Dense (x, y) view of a model solution: y is m x m with y_ee = x_e.
struct RelaxationPoint {
  int m = 0;
  std::vector<double> x;
  std::vector<double> y;
  double Y(int e, int f) const { return y[static_cast<std::size_t>(e) * m + f]; }
};

RelaxationPoint relaxation_point(const QuadraticModel& model, std::span<const double> primal);

/// Full variable vector for the model at a tree with y = x x^T.
std::vector<double> tree_point(const QuadraticModel& model, const Instance& inst, const SpanningTree& tree);

BoundResult vs0_bound(const Instance& inst, bool y_upper_bounds = false, RelaxationPoint* point = nullptr);

struct LinearizationCertificate {
  std::vector<double> a;      ///< weak-sum components
  std::vector<double> p;      ///< p_e = 2(n-2) a_e + q_ee
  double epsilon = 0.0;
  std::vector<double> theta;  ///< theta[k * m + e]
  std::vector<double> mu;     ///< mu[k * n + i]
};

/// Strongest linearization-based bound: the best weak-sum under-estimator of
/// Q combined with the dual of the compact tree formulation. Complete graphs
/// only; throws InvalidArgument otherwise.
BoundResult lbb_bound(const Instance& inst, LinearizationCertificate* cert = nullptr);

struct RltOptions {
  double time_limit = 7200.0;
  double violation_tol = 1e-9;  ///< added rows are violated by more than this, in y units
  int max_rounds = 10000;
};

/// Incomplete first-level RLT relaxation: VS0 rows plus, for each e, the
/// family sum_{f in E(S)} y_ef <= (|S| - 1) x_e generated lazily through the
/// subtour separation LP applied to y_e. / x_e.
BoundResult rlt1_incomplete_bound(const Instance& inst, const RltOptions& opt = {});

/// Largest violation of the incomplete RLT system at an explicit (x, Y):
/// symmetry, row sums, y_ee = x_e, y >= 0, every subset inequality and the
/// subtour description of x. Enumerates all vertex subsets (n <= 16).
double rlt1_max_violation(const Instance& inst, std::span<const double> x, std::span<const double> y);

}  // namespace qmstp
