#include "qmstp/mst.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmstp/error.hpp"
#include "qmstp/lp/simplex.hpp"
#include "qmstp/union_find.hpp"

namespace qmstp {

SpanningTree SpanningTree::from_edges(const Instance& inst, std::vector<int> edges) {
  if (static_cast<int>(edges.size()) != inst.n() - 1)
    throw InvalidArgument("a spanning tree needs n-1 = " + std::to_string(inst.n() - 1) + " edges, got " +
                          std::to_string(edges.size()));
  std::sort(edges.begin(), edges.end());
  std::vector<char> inc(static_cast<std::size_t>(inst.m()), 0);
  DisjointSets ds(inst.n());
  for (int e : edges) {
    if (e < 0 || e >= inst.m()) throw InvalidArgument("edge index " + std::to_string(e) + " out of range");
    if (inc[e]) throw InvalidArgument("edge " + std::to_string(e) + " listed twice");
    inc[e] = 1;
    if (!ds.unite(inst.edge(e).u, inst.edge(e).v))
      throw InvalidArgument("edge " + std::to_string(e) + " closes a cycle");
  }
  return SpanningTree(std::move(edges), std::move(inc));
}

double SpanningTree::linear_cost(std::span<const double> p) const {
  double s = 0.0;
  for (int e : edges_) s += p[static_cast<std::size_t>(e)];
  return s;
}

double quadratic_cost(const Instance& inst, std::span<const int> tree_edges) {
  // Summed in edge-index order so equal trees give bitwise equal costs.
  std::vector<int> sorted(tree_edges.begin(), tree_edges.end());
  std::sort(sorted.begin(), sorted.end());
  double s = 0.0;
  for (int e : sorted) {
    const auto r = inst.row(e);
    for (int f : sorted) s += r[static_cast<std::size_t>(f)];
  }
  return s;
}

double quadratic_cost(const Instance& inst, const SpanningTree& tree) { return quadratic_cost(inst, tree.edges()); }

namespace {

SpanningTree kruskal(const Instance& inst, std::span<const double> p, int forced) {
  if (static_cast<int>(p.size()) != inst.m()) throw InvalidArgument("cost vector length differs from m");
  std::vector<int> order(static_cast<std::size_t>(inst.m()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p[a] < p[b]; });
  DisjointSets ds(inst.n());
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(inst.n() - 1));
  if (forced >= 0) {
    if (forced >= inst.m()) throw InvalidArgument("forced edge out of range");
    ds.unite(inst.edge(forced).u, inst.edge(forced).v);
    chosen.push_back(forced);
  }
  for (int e : order) {
    if (static_cast<int>(chosen.size()) == inst.n() - 1) break;
    if (ds.unite(inst.edge(e).u, inst.edge(e).v)) chosen.push_back(e);
  }
  if (static_cast<int>(chosen.size()) != inst.n() - 1) throw ConnectivityError("graph is not connected");
  return SpanningTree::from_edges(inst, std::move(chosen));
}

}  // namespace

SpanningTree mst(const Instance& inst, std::span<const double> p) { return kruskal(inst, p, -1); }

SpanningTree mst_with_forced_edge(const Instance& inst, std::span<const double> p, int e) {
  return kruskal(inst, p, e);
}

SeparationResult separation_value(const Instance& inst, int k, std::span<const double> x) {
  const int n = inst.n(), m = inst.m();
  if (k < 0 || k >= n) throw InvalidArgument("vertex out of range");
  if (static_cast<int>(x.size()) != m) throw InvalidArgument("point length differs from m");
  for (double v : x)
    if (!(v >= 0.0)) throw InvalidArgument("separation point has a negative or NaN entry");

  lp::LinearProgram model(lp::ObjectiveSense::Maximize);
  std::vector<int> theta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    theta[i] = i == k ? model.add_variable("theta" + std::to_string(i), 1.0, 1.0, 0.0)
                      : model.add_variable("theta" + std::to_string(i), 0.0, 1.0, -1.0);
  for (int e = 0; e < m; ++e) {
    if (x[e] == 0.0) continue;
    const int a = model.add_variable("alpha" + std::to_string(e), 0.0, 1.0, x[e]);
    model.add_row("u" + std::to_string(e), {{a, 1.0}, {theta[inst.edge(e).u], -1.0}}, lp::RowSense::LessEqual, 0.0);
    model.add_row("v" + std::to_string(e), {{a, 1.0}, {theta[inst.edge(e).v], -1.0}}, lp::RowSense::LessEqual, 0.0);
  }
  const auto sol = lp::solve(model);
  if (!sol.optimal()) throw Error("separation LP ended with status " + std::string(lp::status_name(sol.status)));

  // The objective is the Lovasz extension of S -> x(E(S)) - |S| + 1, so some
  // level set of theta is at least as good as theta itself.
  SeparationResult res;
  res.value = std::max(0.0, sol.objective);
  std::vector<double> levels;
  for (int i = 0; i < n; ++i) levels.push_back(sol.primal[theta[i]]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double best = 0.0;
  for (double t : levels) {
    if (t <= 1e-9) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (sol.primal[theta[i]] >= t - 1e-12) s.push_back(i);
    double inside = 0.0;
    for (int e : edge_sets(inst, s).inside) inside += x[e];
    const double viol = inside - static_cast<double>(s.size() - 1);
    if (viol > best + 1e-12) {
      best = viol;
      res.violated_set = std::move(s);
    }
  }
  if (res.value <= 1e-9) {
    res.value = 0.0;
    res.violated_set.clear();
  }
  return res;
}

}  // namespace qmstp
