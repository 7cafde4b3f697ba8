#include "explicit_models.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qmstp/lp/simplex.hpp"
#include "qmstp/rng.hpp"

namespace qmstp::testing {

namespace {

using lp::RowSense;
using lp::Term;

std::vector<std::vector<int>> proper_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    if (s.size() >= 2) out.push_back(std::move(s));
  }
  return out;
}

void add_subtour_rows(lp::LinearProgram& lp, const Instance& inst, int x0) {
  std::vector<Term> card;
  for (int e = 0; e < inst.m(); ++e) card.push_back({x0 + e, 1.0});
  lp.add_row("card", std::move(card), RowSense::Equal, inst.n() - 1.0);
  for (const auto& s : proper_subsets(inst.n())) {
    const auto sets = edge_sets(inst, s);
    if (sets.inside.empty()) continue;
    std::vector<Term> t;
    for (int e : sets.inside) t.push_back({x0 + e, 1.0});
    lp.add_row("sub", std::move(t), RowSense::LessEqual, s.size() - 1.0);
  }
}

double solve_or_throw(const lp::LinearProgram& lp) {
  const auto sol = lp::solve(lp);
  if (!sol.optimal()) throw std::runtime_error("oracle LP not optimal: " + std::string(lp::status_name(sol.status)));
  return sol.objective;
}

}  // namespace

double explicit_gl_lp(const Instance& inst, bool symmetric) {
  const int n = inst.n(), m = inst.m();
  if (n > 8) throw std::invalid_argument("explicit model limited to n <= 8");
  lp::LinearProgram lp;
  const int x0 = lp.num_variables();
  for (int e = 0; e < m; ++e) lp.add_variable("x", 0.0, lp::kInf, 0.0);
  const int y0 = lp.num_variables();
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f) lp.add_variable("y", 0.0, lp::kInf, inst.q(e, f));
  auto y = [&](int e, int f) { return y0 + e * m + f; };
  add_subtour_rows(lp, inst, x0);
  for (int e = 0; e < m; ++e) {
    std::vector<Term> t;
    for (int f = 0; f < m; ++f) t.push_back({y(e, f), 1.0});
    t.push_back({x0 + e, -(n - 1.0)});
    lp.add_row("rowsum", std::move(t), RowSense::Equal, 0.0);
    lp.add_row("diag", {{y(e, e), 1.0}, {x0 + e, -1.0}}, RowSense::Equal, 0.0);
  }
  const auto subsets = proper_subsets(n);
  for (int e = 0; e < m; ++e)
    for (const auto& s : subsets) {
      const auto sets = edge_sets(inst, s);
      if (sets.inside.empty()) continue;
      std::vector<Term> t;
      for (int f : sets.inside) t.push_back({y(e, f), 1.0});
      t.push_back({x0 + e, -(s.size() - 1.0)});
      lp.add_row("rlt", std::move(t), RowSense::LessEqual, 0.0);
    }
  if (symmetric)
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f) lp.add_row("sym", {{y(e, f), 1.0}, {y(f, e), -1.0}}, RowSense::Equal, 0.0);
  return solve_or_throw(lp);
}

double explicit_tree_lp(const Instance& inst, const std::vector<double>& p) {
  lp::LinearProgram lp;
  for (int e = 0; e < inst.m(); ++e) lp.add_variable("x", 0.0, lp::kInf, p[e]);
  add_subtour_rows(lp, inst, 0);
  return solve_or_throw(lp);
}

double brute_force_separation(const Instance& inst, int k, const std::vector<double>& x) {
  const int n = inst.n();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> k & 1u)) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    double lhs = 0.0;
    for (int e : edge_sets(inst, s).inside) lhs += x[e];
    best = std::max(best, lhs - (s.size() - 1.0));
  }
  return best;
}

Instance random_instance(int n, int density, std::uint64_t seed, int lo, int hi) {
  Rng rng(stream_seed(seed, "test-instance", n, density));
  const auto all = complete_graph_edges(n);
  const int m = edges_for_density(n, density);
  std::vector<Edge> edges;
  do {
    auto pool = all;
    for (std::size_t i = pool.size(); i > 1; --i)
      std::swap(pool[i - 1], pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
    edges.assign(pool.begin(), pool.begin() + m);
    std::sort(edges.begin(), edges.end());
  } while (!is_connected(n, edges));
  std::vector<double> q(static_cast<std::size_t>(m) * m);
  for (int e = 0; e < m; ++e)
    for (int f = e; f < m; ++f)
      q[static_cast<std::size_t>(e) * m + f] = q[static_cast<std::size_t>(f) * m + e] =
          static_cast<double>(rng.uniform_int(lo, hi));
  return Instance(n, std::move(edges), std::move(q), "rand_n" + std::to_string(n) + "_s" + std::to_string(seed));
}

}  // namespace qmstp::testing
