#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qmstp/instance.hpp"

namespace qmstp {

struct EnumerationReport {
  long long tree_count = 0;
  double optimum = 0.0;
  std::vector<int> best_tree;
  std::vector<double> costs;  ///< every tree's cost, only when requested
};

/// Calls visit(edges, cost) for every spanning tree, where cost is x^T Q x.
/// Edges are passed in increasing index order.
void for_each_spanning_tree(const Instance& inst,
                            const std::function<void(std::span<const int>, double)>& visit);

/// Exact optimum by enumeration. Throws InvalidArgument if n > limit_n.
EnumerationReport exact_qmstp(const Instance& inst, int limit_n = 9, bool keep_costs = false);

/// Finds a with q_ef = a_e + a_f for all e != f (least squares, then an exact
/// residual check at `tol`). Requires m >= 3; returns nullopt otherwise or
/// when Q is not a symmetric weak sum matrix.
std::optional<std::vector<double>> weak_sum_decompose(const Instance& inst, double tol = 1e-9);

/// p_e = 2(n - 2) a_e + q_ee.
std::vector<double> linearization_vector(const Instance& inst, std::span<const double> a);

/// Instance on the given graph with q_ef = a_e + a_f off the diagonal and the
/// given diagonal.
Instance weak_sum_instance(int n, std::vector<Edge> edges, std::span<const double> a,
                           std::span<const double> diag, std::string name = {});

}  // namespace qmstp
