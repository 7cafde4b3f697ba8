#pragma once

#include <span>
#include <vector>

#include "qmstp/instance.hpp"

namespace qmstp {

/// A spanning tree of an instance's graph, stored as sorted edge indices plus
/// the 0/1 incidence vector. Construction checks cardinality and acyclicity.
class SpanningTree {
 public:
  static SpanningTree from_edges(const Instance& inst, std::vector<int> edges);

  const std::vector<int>& edges() const { return edges_; }
  const std::vector<char>& incidence() const { return incidence_; }
  bool contains(int e) const { return incidence_[static_cast<std::size_t>(e)] != 0; }
  double linear_cost(std::span<const double> p) const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.edges_ == b.edges_; }

 private:
  SpanningTree(std::vector<int> edges, std::vector<char> incidence)
      : edges_(std::move(edges)), incidence_(std::move(incidence)) {}

  std::vector<int> edges_;
  std::vector<char> incidence_;
};

/// x^T Q x for the tree's incidence vector.
double quadratic_cost(const Instance& inst, const SpanningTree& tree);
double quadratic_cost(const Instance& inst, std::span<const int> tree_edges);

/// Kruskal; ties broken by smallest edge index.
SpanningTree mst(const Instance& inst, std::span<const double> p);

/// Cheapest tree containing edge e.
SpanningTree mst_with_forced_edge(const Instance& inst, std::span<const double> p, int e);

struct SeparationResult {
  double value = 0.0;              ///< optimal value of the separation LP; 0 iff no violated set
  std::vector<int> violated_set;   ///< a set S containing k with x(E(S)) > |S| - 1 (empty if none)
};

/// Subtour separation LP for sets containing vertex k. The LP is homogeneous,
/// so it is normalised with 0 <= theta_i <= 1 and theta_k = 1; its optimum is
/// then max over S containing k of x(E(S)) - (|S| - 1), clipped at 0.
SeparationResult separation_value(const Instance& inst, int k, std::span<const double> x);

}  // namespace qmstp
