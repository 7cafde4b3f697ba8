#include "qmstp/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qmstp/error.hpp"
#include "qmstp/mst.hpp"

namespace qmstp {

namespace {

// Union-find without path compression so unions can be undone in LIFO order.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

struct Enumerator {
  const Instance& inst;
  const std::function<void(std::span<const int>, double)>& visit;
  RollbackSets sets;
  std::vector<int> chosen;
  std::vector<double> s;  // s_g = sum over chosen h of q_gh
  double cost = 0.0;
  int need;

  void run(int e) {
    if (static_cast<int>(chosen.size()) == need) {
      visit(chosen, cost);
      return;
    }
    if (inst.m() - e < need - static_cast<int>(chosen.size())) return;
    const Edge& ed = inst.edge(e);
    if (sets.unite(ed.u, ed.v)) {
      const double add = inst.q(e, e) + 2 * s[e];
      const auto r = inst.row(e);
      for (std::size_t g = 0; g < s.size(); ++g) s[g] += r[g];
      cost += add;
      chosen.push_back(e);
      run(e + 1);
      chosen.pop_back();
      cost -= add;
      for (std::size_t g = 0; g < s.size(); ++g) s[g] -= r[g];
      sets.undo();
    }
    run(e + 1);
  }
};

}  // namespace

void for_each_spanning_tree(const Instance& inst,
                            const std::function<void(std::span<const int>, double)>& visit) {
  Enumerator en{inst, visit, RollbackSets(inst.n()), {}, std::vector<double>(static_cast<std::size_t>(inst.m()), 0.0),
                0.0, inst.n() - 1};
  en.run(0);
}

EnumerationReport exact_qmstp(const Instance& inst, int limit_n, bool keep_costs) {
  if (inst.n() > limit_n)
    throw InvalidArgument("exact enumeration limited to n <= " + std::to_string(limit_n) + ", got n = " +
                          std::to_string(inst.n()));
  EnumerationReport rep;
  rep.optimum = std::numeric_limits<double>::infinity();
  for_each_spanning_tree(inst, [&](std::span<const int> edges, double cost) {
    ++rep.tree_count;
    if (keep_costs) rep.costs.push_back(cost);
    // The running cost drifts; candidates near the best are re-summed exactly.
    if (cost < rep.optimum + 1e-7 * (1.0 + std::abs(rep.optimum))) {
      const double exact = quadratic_cost(inst, edges);
      if (exact < rep.optimum) {
        rep.optimum = exact;
        rep.best_tree.assign(edges.begin(), edges.end());
      }
    }
  });
  return rep;
}

std::optional<std::vector<double>> weak_sum_decompose(const Instance& inst, double tol) {
  const int m = inst.m();
  if (m < 3) return std::nullopt;
  // Normal equations of min sum_{e<f} (a_e + a_f - q_ef)^2:
  // (m - 2) a_e + sum_f a_f = r_e with r_e the off-diagonal row sum. Summing
  // over e gives sum a = R / (2m - 2).
  std::vector<double> r(static_cast<std::size_t>(m), 0.0);
  double total = 0.0;
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f)
      if (f != e) r[e] += inst.q(e, f);
    total += r[e];
  }
  const double sum_a = total / (2.0 * m - 2.0);
  std::vector<double> a(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) a[e] = (r[e] - sum_a) / (m - 2);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f)
      if (std::abs(a[e] + a[f] - inst.q(e, f)) > tol * (1.0 + std::abs(inst.q(e, f)))) return std::nullopt;
  return a;
}

std::vector<double> linearization_vector(const Instance& inst, std::span<const double> a) {
  std::vector<double> p(static_cast<std::size_t>(inst.m()));
  for (int e = 0; e < inst.m(); ++e) p[e] = 2.0 * (inst.n() - 2) * a[e] + inst.q(e, e);
  return p;
}

Instance weak_sum_instance(int n, std::vector<Edge> edges, std::span<const double> a, std::span<const double> diag,
                           std::string name) {
  const std::size_t m = edges.size();
  if (a.size() != m || diag.size() != m) throw InvalidArgument("a and diag need one entry per edge");
  std::vector<double> q(m * m);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f) q[e * m + f] = e == f ? diag[e] : a[e] + a[f];
  return Instance(n, std::move(edges), std::move(q), std::move(name));
}

}  // namespace qmstp
