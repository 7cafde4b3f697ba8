#include "qmstp/gl_bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "qmstp/error.hpp"
#include "qmstp/heuristics.hpp"
#include "qmstp/mst.hpp"

namespace qmstp {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

GlEvaluation gl_procedure(const Instance& inst, std::span<const double> c) {
  const int m = inst.m();
  if (c.size() != static_cast<std::size_t>(m) * m) throw InvalidArgument("cost matrix must be m x m");
  GlEvaluation ev;
  ev.subproblem.resize(static_cast<std::size_t>(m));
  ev.edge_trees.resize(static_cast<std::size_t>(m));
  std::vector<double> master(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    const auto row = c.subspan(static_cast<std::size_t>(e) * m, m);
    const auto tree = mst_with_forced_edge(inst, row, e);
    double s = 0.0;
    for (int f : tree.edges())
      if (f != e) s += row[f];
    ev.subproblem[e] = s;
    ev.edge_trees[e] = tree.edges();
    master[e] = s + row[e];
  }
  const auto tree = mst(inst, master);
  ev.value = tree.linear_cost(master);
  ev.master_tree = tree.edges();
  return ev;
}

BoundResult gl_bound(const Instance& inst) {
  const auto t0 = Clock::now();
  BoundResult r;
  r.method = "gl";
  const auto ev = gl_procedure(inst, inst.matrix());
  r.value = ev.value;
  r.iterations = 1;
  r.certificate = ev.subproblem;
  r.seconds = since(t0);
  r.trace.push_back({0, r.value, 0, r.seconds});
  return r;
}

namespace {

std::vector<double> leveled_costs(const Instance& inst, std::span<const double> gamma) {
  const int m = inst.m(), n = inst.n();
  std::vector<double> c(inst.matrix().begin(), inst.matrix().end());
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) {
      if (e == f) c[static_cast<std::size_t>(e) * m + f] -= (n - 2) * gamma[e];
      else c[static_cast<std::size_t>(e) * m + f] += gamma[f];
    }
  }
  return c;
}

}  // namespace

double assad_xu_value(const Instance& inst, std::span<const double> gamma) {
  if (static_cast<int>(gamma.size()) != inst.m()) throw InvalidArgument("gamma length differs from m");
  return gl_procedure(inst, leveled_costs(inst, gamma)).value;
}

BoundResult assad_xu(const Instance& inst, const AssadXuOptions& opt) {
  const auto t0 = Clock::now();
  const int m = inst.m(), n = inst.n();
  BoundResult r;
  r.method = "ax";
  std::vector<double> gamma(static_cast<std::size_t>(m), 0.0);
  long decreases = 0;
  for (int it = 0; it < std::max(1, opt.max_iters); ++it) {
    const auto c = leveled_costs(inst, gamma);
    const auto ev = gl_procedure(inst, c);
    if (!r.trace.empty() && ev.value < r.trace.back().bound) {
      ++decreases;
      std::ostringstream msg;
      msg << "iteration " << it << ": bound decreased from " << r.trace.back().bound << " to " << ev.value;
      r.notes.push_back(msg.str());
    }
    r.trace.push_back({it, ev.value, 0, since(t0)});
    r.value = ev.value;
    r.iterations = it + 1;
    r.certificate = gamma;
    const auto [lo, hi] = std::minmax_element(ev.subproblem.begin(), ev.subproblem.end());
    if (*hi - *lo <= opt.epsilon_stop) break;
    if (it + 1 == opt.max_iters) r.status = "iteration_limit";
    for (int e = 0; e < m; ++e) {
      const double diag = c[static_cast<std::size_t>(e) * m + e];
      gamma[e] += (ev.subproblem[e] + diag) / (n - 1);
    }
  }
  r.counters["decreases"] = decreases;
  double best = r.trace.front().bound;
  for (const auto& p : r.trace) best = std::max(best, p.bound);
  r.values["best"] = best;
  r.seconds = since(t0);
  return r;
}

std::vector<double> lagrangian_costs(const Instance& inst, std::span<const double> lambda) {
  const int m = inst.m(), n = inst.n();
  if (lambda.size() != static_cast<std::size_t>(n) * m) throw InvalidArgument("lambda must have n*m entries");
  auto at = [&](int i, int f) {
    const Edge& ef = inst.edge(f);
    return (i == ef.u || i == ef.v) ? 0.0 : lambda[static_cast<std::size_t>(i) * m + f];
  };
  std::vector<double> c(inst.matrix().begin(), inst.matrix().end());
  for (int e = 0; e < m; ++e) {
    const Edge& ee = inst.edge(e);
    for (int f = 0; f < m; ++f) {
      double& v = c[static_cast<std::size_t>(e) * m + f];
      if (e == f) {
        for (int i = 0; i < n; ++i) v += at(i, e);
      } else {
        v -= at(ee.u, f) + at(ee.v, f);
      }
    }
  }
  return c;
}

double lagrangian_value(const Instance& inst, std::span<const double> lambda) {
  return gl_procedure(inst, lagrangian_costs(inst, lambda)).value;
}

BoundResult oncan_punnen(const Instance& inst, const SubgradientOptions& opt) {
  const auto t0 = Clock::now();
  const int m = inst.m(), n = inst.n();
  BoundResult r;
  r.method = "op";
  double ub = opt.upper_bound;
  if (std::isnan(ub)) ub = tabu_search(inst, {.seed = opt.seed}).cost;
  r.values["upper_bound"] = ub;

  std::vector<double> lambda(static_cast<std::size_t>(n) * m, 0.0);
  std::vector<double> g(lambda.size());
  double theta = opt.step_scale;
  int stale = 0;
  for (int it = 0; it < std::max(1, opt.max_iters); ++it) {
    const auto ev = gl_procedure(inst, lagrangian_costs(inst, lambda));
    if (ev.value > r.value) {
      r.value = ev.value;
      r.certificate = lambda;
      stale = 0;
    } else if (++stale >= opt.patience) {
      theta /= 2;
      stale = 0;
    }
    r.trace.push_back({it, r.value, 0, since(t0)});
    r.iterations = it + 1;

    // Subgradient x_f - sum_{e in delta(i)} y_ef at the relaxed solution,
    // where y_ef = x_e [f in T_e].
    std::vector<char> in_master(static_cast<std::size_t>(m), 0);
    for (int e : ev.master_tree) in_master[e] = 1;
    std::fill(g.begin(), g.end(), 0.0);
    for (int e : ev.master_tree) {
      const Edge& ee = inst.edge(e);
      for (int f : ev.edge_trees[e]) {
        if (f == e) continue;
        g[static_cast<std::size_t>(ee.u) * m + f] -= 1.0;
        g[static_cast<std::size_t>(ee.v) * m + f] -= 1.0;
      }
    }
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int f = 0; f < m; ++f) {
        const auto k = static_cast<std::size_t>(i) * m + f;
        const Edge& ef = inst.edge(f);
        if (i == ef.u || i == ef.v) {
          g[k] = 0.0;
          continue;
        }
        g[k] += in_master[f];
        // Projected direction: a negative component at lambda = 0 cannot move.
        if (lambda[k] <= 0.0 && g[k] < 0.0) g[k] = 0.0;
        norm2 += g[k] * g[k];
      }
    }
    if (norm2 == 0.0) break;
    if (theta < opt.min_step_scale) {
      r.status = "step_exhausted";
      break;
    }
    const double gap = std::max(ub - ev.value, 1e-9 * (1.0 + std::abs(ub)));
    const double step = theta * gap / norm2;
    for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] = std::max(0.0, lambda[k] + step * g[k]);
  }
  r.seconds = since(t0);
  return r;
}

}  // namespace qmstp
