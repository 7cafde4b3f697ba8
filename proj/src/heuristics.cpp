#include "qmstp/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmstp/rng.hpp"

namespace qmstp {

namespace {

constexpr double kImprove = 1e-9;

// Spanning tree with s_g = sum_{h in T} q_gh kept for every edge g, so an
// exchange is priced in O(1).
class TreeState {
 public:
  TreeState(const Instance& inst, const std::vector<int>& edges)
      : inst_(&inst), in_(static_cast<std::size_t>(inst.m()), 0), s_(static_cast<std::size_t>(inst.m()), 0.0) {
    for (int e : edges) add(e);
    cost_ = 0.0;
    for (int e : edges) cost_ += s_[e];
  }

  double cost() const { return cost_; }
  bool contains(int e) const { return in_[e] != 0; }

  double swap_delta(int out, int in) const {
    return -2 * s_[out] + 2 * s_[in] + inst_->q(out, out) + inst_->q(in, in) - 2 * inst_->q(out, in);
  }

  void swap(int out, int in) {
    cost_ += swap_delta(out, in);
    remove(out);
    add(in);
  }

  std::vector<int> edges() const {
    std::vector<int> out;
    for (int e = 0; e < inst_->m(); ++e)
      if (in_[e]) out.push_back(e);
    return out;
  }

  // side[v] for the component of v after deleting tree edge e (1 on e.u's side).
  void cut_sides(int e, std::vector<char>& side) const {
    const int n = inst_->n();
    side.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{inst_->edge(e).u};
    side[inst_->edge(e).u] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int f : inst_->incident(v)) {
        if (f == e || !in_[f]) continue;
        const int w = inst_->edge(f).u == v ? inst_->edge(f).v : inst_->edge(f).u;
        if (!side[w]) {
          side[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }

 private:
  void add(int e) {
    in_[e] = 1;
    const auto r = inst_->row(e);
    for (std::size_t g = 0; g < s_.size(); ++g) s_[g] += r[g];
  }
  void remove(int e) {
    in_[e] = 0;
    const auto r = inst_->row(e);
    for (std::size_t g = 0; g < s_.size(); ++g) s_[g] -= r[g];
  }

  const Instance* inst_;
  std::vector<char> in_;
  std::vector<double> s_;
  double cost_ = 0.0;
};

struct Move {
  int out = -1;
  int in = -1;
  double delta = std::numeric_limits<double>::infinity();
};

template <class Accept>
Move best_move(const Instance& inst, const TreeState& t, Accept&& accept) {
  Move best;
  std::vector<char> side;
  for (int e : t.edges()) {
    t.cut_sides(e, side);
    for (int f = 0; f < inst.m(); ++f) {
      if (t.contains(f)) continue;
      const Edge& ef = inst.edge(f);
      if (side[ef.u] == side[ef.v]) continue;
      const double d = t.swap_delta(e, f);
      if (d < best.delta && accept(e, f, d)) best = {e, f, d};
    }
  }
  return best;
}

std::vector<int> random_tree(const Instance& inst, Rng& rng) {
  std::vector<double> w(static_cast<std::size_t>(inst.m()));
  for (double& v : w) v = rng.uniform01();
  return mst(inst, w).edges();
}

bool random_exchange(const Instance& inst, TreeState& t, Rng& rng) {
  const auto edges = t.edges();
  std::vector<char> side;
  for (int attempt = 0; attempt < 4 * inst.n(); ++attempt) {
    const int e = edges[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(edges.size()) - 1))];
    t.cut_sides(e, side);
    std::vector<int> cand;
    for (int f = 0; f < inst.m(); ++f)
      if (!t.contains(f) && side[inst.edge(f).u] != side[inst.edge(f).v]) cand.push_back(f);
    if (cand.empty()) continue;
    t.swap(e, cand[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(cand.size()) - 1))]);
    return true;
  }
  return false;
}

void descend(const Instance& inst, TreeState& t) {
  while (true) {
    const Move mv = best_move(inst, t, [](int, int, double) { return true; });
    if (mv.out < 0 || mv.delta >= -kImprove) return;
    t.swap(mv.out, mv.in);
  }
}

HeuristicResult make_result(const Instance& inst, const std::vector<int>& edges, long iterations) {
  auto tree = SpanningTree::from_edges(inst, edges);
  const double cost = quadratic_cost(inst, tree);
  return {std::move(tree), cost, iterations};
}

}  // namespace

HeuristicResult tabu_search(const Instance& inst, const TabuOptions& opt) {
  const int m = inst.m();
  const int runs = std::max(1, opt.restarts);
  const int per_run = std::max(1, opt.iterations / runs);
  const long tenure = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(m))));
  Rng rng(stream_seed(opt.seed, "tabu", static_cast<std::uint64_t>(m)));

  std::vector<double> diag(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) diag[e] = inst.q(e, e);

  std::vector<int> best_edges;
  double best_cost = std::numeric_limits<double>::infinity();
  long total = 0;
  for (int run = 0; run < runs; ++run) {
    TreeState t(inst, run == 0 ? mst(inst, diag).edges() : random_tree(inst, rng));
    if (t.cost() < best_cost - kImprove) {
      best_cost = t.cost();
      best_edges = t.edges();
    }
    std::vector<long> no_add(static_cast<std::size_t>(m), -1), no_remove(static_cast<std::size_t>(m), -1);
    for (long it = 0; it < per_run; ++it, ++total) {
      const double cur = t.cost();
      const Move mv = best_move(inst, t, [&](int e, int f, double d) {
        const bool tabu = no_remove[e] >= it || no_add[f] >= it;
        return !tabu || cur + d < best_cost - kImprove;
      });
      if (mv.out < 0) break;
      t.swap(mv.out, mv.in);
      no_add[mv.out] = it + tenure;
      no_remove[mv.in] = it + tenure;
      if (t.cost() < best_cost - kImprove) {
        best_cost = t.cost();
        best_edges = t.edges();
      }
    }
  }
  return make_result(inst, best_edges, total);
}

HeuristicResult vns_polish(const Instance& inst, const SpanningTree& start, const VnsOptions& opt) {
  Rng rng(stream_seed(opt.seed, "vns", static_cast<std::uint64_t>(inst.m())));
  TreeState best(inst, start.edges());
  long iterations = 0;
  int quiet = 0;
  while (quiet < opt.passes) {
    bool improved = false;
    for (int k = 1; k <= opt.k_max;) {
      TreeState t = best;
      for (int s = 0; s < k; ++s) random_exchange(inst, t, rng);
      descend(inst, t);
      ++iterations;
      if (t.cost() < best.cost() - kImprove) {
        best = t;
        improved = true;
        k = 1;
      } else {
        ++k;
      }
    }
    quiet = improved ? 0 : quiet + 1;
  }
  auto res = make_result(inst, best.edges(), iterations);
  const double start_cost = quadratic_cost(inst, start);
  if (res.cost > start_cost) return {start, start_cost, iterations};
  return res;
}

HeuristicResult upper_bound(const Instance& inst, std::uint64_t seed) {
  auto tabu = tabu_search(inst, {.seed = seed});
  auto polished = vns_polish(inst, tabu.tree, {.seed = seed});
  return polished.cost < tabu.cost ? polished : tabu;
}

}  // namespace qmstp
