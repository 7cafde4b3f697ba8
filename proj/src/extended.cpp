#include "qmstp/extended.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <string>

#include "qmstp/error.hpp"

namespace qmstp {

using lp::kInf;
using lp::RowSense;
using lp::Term;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string idx(int a) { return std::to_string(a); }
std::string idx(int a, int b) { return std::to_string(a) + "_" + std::to_string(b); }
std::string idx(int a, int b, int c) { return idx(a, b) + "_" + std::to_string(c); }

}  // namespace

ExtendedBlock add_extended_block(lp::LinearProgram& lp, const Instance& inst, std::span<const double> p) {
  const int n = inst.n(), m = inst.m();
  if (!p.empty() && static_cast<int>(p.size()) != m) throw InvalidArgument("cost vector length differs from m");
  ExtendedBlock b;
  b.n = n;
  b.m = m;
  b.x0 = lp.num_variables();
  for (int e = 0; e < m; ++e) lp.add_variable("x" + idx(e), 0.0, kInf, p.empty() ? 0.0 : p[e]);
  b.z0 = lp.num_variables();
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < m; ++e) {
      const Edge& ed = inst.edge(e);
      lp.add_variable("z" + idx(k, ed.u, ed.v), 0.0, kInf, 0.0);
      lp.add_variable("z" + idx(k, ed.v, ed.u), 0.0, kInf, 0.0);
    }

  std::vector<Term> card;
  for (int e = 0; e < m; ++e) card.push_back({b.x(e), 1.0});
  b.cardinality_row = lp.add_row("card", std::move(card), RowSense::Equal, n - 1.0);

  b.pairing_row0 = lp.num_rows();
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < m; ++e)
      lp.add_row("pair" + idx(k, e), {{b.z(k, e, 0), 1.0}, {b.z(k, e, 1), 1.0}, {b.x(e), -1.0}}, RowSense::Equal,
                 0.0);

  b.degree_row0 = lp.num_rows();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      std::vector<Term> t;
      for (int e : inst.incident(i)) t.push_back({b.z(k, e, inst.edge(e).u == i ? 0 : 1), 1.0});
      lp.add_row("deg" + idx(k, i), std::move(t), RowSense::LessEqual, i == k ? 0.0 : 1.0);
    }
  return b;
}

lp::LinearProgram extended_mst_model(const Instance& inst, std::span<const double> p) {
  lp::LinearProgram lp;
  add_extended_block(lp, inst, p);
  return lp;
}

void set_tree_point(const ExtendedBlock& b, const Instance& inst, const SpanningTree& tree,
                    std::vector<double>& point) {
  const int n = inst.n();
  for (int e = 0; e < b.m; ++e) point[b.x(e)] = tree.contains(e) ? 1.0 : 0.0;
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::fill(parent.begin(), parent.end(), -2);
    parent[k] = -1;
    std::vector<int> stack{k};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : inst.incident(v)) {
        if (!tree.contains(e)) continue;
        const int w = inst.edge(e).u == v ? inst.edge(e).v : inst.edge(e).u;
        if (parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (int e = 0; e < b.m; ++e) {
      const Edge& ed = inst.edge(e);
      const bool in = tree.contains(e);
      point[b.z(k, e, 0)] = in && parent[ed.u] == ed.v ? 1.0 : 0.0;
      point[b.z(k, e, 1)] = in && parent[ed.v] == ed.u ? 1.0 : 0.0;
    }
  }
}

int QuadraticModel::y(int e, int f) const {
  if (e == f) throw InvalidArgument("y_ee is represented by x_e");
  if (e > f) std::swap(e, f);
  // Pairs (e, f), e < f, in row-major order.
  const int before = e * m - e * (e + 1) / 2;
  return y0 + before + (f - e - 1);
}

QuadraticModel build_vs0_model(const Instance& inst, bool y_upper_bounds) {
  const int n = inst.n(), m = inst.m();
  QuadraticModel qm;
  qm.m = m;
  std::vector<double> diag(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) diag[e] = inst.q(e, e);
  qm.block = add_extended_block(qm.lp, inst, diag);
  qm.y0 = qm.lp.num_variables();
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) qm.lp.add_variable("y" + idx(e, f), 0.0, y_upper_bounds ? 1.0 : kInf, 2.0 * inst.q(e, f));
  qm.row_sum0 = qm.lp.num_rows();
  for (int e = 0; e < m; ++e) {
    std::vector<Term> t;
    for (int f = 0; f < m; ++f)
      if (f != e) t.push_back({qm.y(e, f), 1.0});
    t.push_back({qm.x(e), -(n - 2.0)});
    qm.lp.add_row("rowsum" + idx(e), std::move(t), RowSense::Equal, 0.0);
  }
  return qm;
}

RelaxationPoint relaxation_point(const QuadraticModel& model, std::span<const double> primal) {
  const int m = model.m;
  RelaxationPoint pt;
  pt.m = m;
  pt.x.resize(static_cast<std::size_t>(m));
  pt.y.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int e = 0; e < m; ++e) {
    pt.x[e] = primal[model.x(e)];
    pt.y[static_cast<std::size_t>(e) * m + e] = pt.x[e];
  }
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const double v = primal[model.y(e, f)];
      pt.y[static_cast<std::size_t>(e) * m + f] = v;
      pt.y[static_cast<std::size_t>(f) * m + e] = v;
    }
  return pt;
}

std::vector<double> tree_point(const QuadraticModel& model, const Instance& inst, const SpanningTree& tree) {
  std::vector<double> point(static_cast<std::size_t>(model.lp.num_variables()), 0.0);
  set_tree_point(model.block, inst, tree, point);
  for (int e = 0; e < model.m; ++e)
    for (int f = e + 1; f < model.m; ++f) point[model.y(e, f)] = tree.contains(e) && tree.contains(f) ? 1.0 : 0.0;
  return point;
}

namespace {

void fail_if_not_optimal(const lp::LpSolution& s, BoundResult& r) {
  if (s.optimal()) return;
  r.status = std::string(lp::status_name(s.status));
  if (s.status != lp::Status::TimeLimit && s.status != lp::Status::IterationLimit)
    throw Error(r.method + ": LP ended with status " + r.status);
}

}  // namespace

BoundResult vs0_bound(const Instance& inst, bool y_upper_bounds, RelaxationPoint* point) {
  const auto t0 = Clock::now();
  BoundResult r;
  r.method = y_upper_bounds ? "vs0_boxed" : "vs0";
  const auto model = build_vs0_model(inst, y_upper_bounds);
  const auto sol = lp::solve(model.lp);
  fail_if_not_optimal(sol, r);
  r.iterations = sol.iterations;
  if (sol.optimal()) {
    r.value = sol.objective;
    r.certificate = sol.dual;
    if (point) *point = relaxation_point(model, sol.primal);
  }
  r.counters["lp_rows"] = model.lp.num_rows();
  r.counters["lp_columns"] = model.lp.num_variables();
  r.seconds = since(t0);
  r.trace.push_back({0, r.value, 0, r.seconds});
  return r;
}

BoundResult lbb_bound(const Instance& inst, LinearizationCertificate* cert) {
  if (!inst.is_complete()) throw InvalidArgument("the linearization bound needs a complete graph");
  const auto t0 = Clock::now();
  const int n = inst.n(), m = inst.m();
  BoundResult r;
  r.method = "lbb";
  lp::LinearProgram lp(lp::ObjectiveSense::Maximize);
  const int a0 = lp.num_variables();
  for (int e = 0; e < m; ++e) lp.add_variable("a" + idx(e), -kInf, kInf, 0.0);
  const int eps = lp.add_variable("eps", -kInf, kInf, -(n - 1.0));
  const int th0 = lp.num_variables();
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < m; ++e) lp.add_variable("theta" + idx(k, e), -kInf, kInf, 0.0);
  const int mu0 = lp.num_variables();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) lp.add_variable("mu" + idx(k, i), 0.0, kInf, i == k ? 0.0 : -1.0);

  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f)
      lp.add_row("ws" + idx(e, f), {{a0 + e, 1.0}, {a0 + f, 1.0}}, RowSense::LessEqual, inst.q(e, f));
  for (int e = 0; e < m; ++e) {
    std::vector<Term> t;
    for (int k = 0; k < n; ++k) t.push_back({th0 + k * m + e, 1.0});
    t.push_back({eps, -1.0});
    t.push_back({a0 + e, -2.0 * (n - 2)});
    lp.add_row("lin" + idx(e), std::move(t), RowSense::LessEqual, inst.q(e, e));
  }
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < m; ++e) {
      const Edge& ed = inst.edge(e);
      lp.add_row("arc" + idx(k, ed.u, ed.v), {{mu0 + k * n + ed.u, 1.0}, {th0 + k * m + e, 1.0}},
                 RowSense::GreaterEqual, 0.0);
      lp.add_row("arc" + idx(k, ed.v, ed.u), {{mu0 + k * n + ed.v, 1.0}, {th0 + k * m + e, 1.0}},
                 RowSense::GreaterEqual, 0.0);
    }

  const auto sol = lp::solve(lp);
  fail_if_not_optimal(sol, r);
  r.iterations = sol.iterations;
  r.counters["lp_rows"] = lp.num_rows();
  r.counters["lp_columns"] = lp.num_variables();
  if (sol.optimal()) {
    r.value = sol.objective;
    LinearizationCertificate c;
    c.a.assign(sol.primal.begin() + a0, sol.primal.begin() + a0 + m);
    c.epsilon = sol.primal[eps];
    c.theta.assign(sol.primal.begin() + th0, sol.primal.begin() + th0 + n * m);
    c.mu.assign(sol.primal.begin() + mu0, sol.primal.begin() + mu0 + n * n);
    c.p.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) c.p[e] = 2.0 * (n - 2) * c.a[e] + inst.q(e, e);
    const auto tree = mst(inst, c.p);
    r.values["mst_p"] = tree.linear_cost(c.p);
    r.certificate = c.a;
    if (cert) *cert = std::move(c);
  }
  r.seconds = since(t0);
  r.trace.push_back({0, r.value, 0, r.seconds});
  return r;
}

BoundResult rlt1_incomplete_bound(const Instance& inst, const RltOptions& opt) {
  const auto t0 = Clock::now();
  const int n = inst.n(), m = inst.m();
  BoundResult r;
  r.method = "rlt1";
  auto model = build_vs0_model(inst, true);
  lp::Simplex simplex(model.lp);
  std::set<std::pair<int, std::vector<int>>> added;
  long rows_added = 0;

  for (int round = 0; round < opt.max_rounds; ++round) {
    const double remaining = opt.time_limit - since(t0);
    if (remaining <= 0) {
      r.status = "time_limit";
      break;
    }
    simplex.set_limits({.time_limit = remaining});
    const auto sol = simplex.solve();
    r.iterations += sol.iterations;
    fail_if_not_optimal(sol, r);
    if (!sol.optimal()) break;
    r.value = std::max(r.value, sol.objective);
    const auto pt = relaxation_point(model, sol.primal);

    long new_rows = 0;
    std::vector<double> w(static_cast<std::size_t>(m));
    for (int e = 0; e < m && since(t0) < opt.time_limit; ++e) {
      const double xe = pt.x[e];
      if (xe <= 1e-9) continue;
      for (int f = 0; f < m; ++f) w[f] = f == e ? 1.0 : std::max(0.0, pt.Y(e, f) / xe);
      std::vector<char> covered(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < n; ++k) {
        if (covered[k]) continue;
        const auto sep = separation_value(inst, k, w);
        if (sep.violated_set.empty()) continue;
        for (int v : sep.violated_set) covered[v] = 1;
        const auto sets = edge_sets(inst, sep.violated_set);
        double lhs = 0.0;
        for (int f : sets.inside) lhs += w[f];
        const double viol = xe * (lhs - static_cast<double>(sep.violated_set.size() - 1));
        if (viol <= opt.violation_tol) continue;
        if (!added.insert({e, sep.violated_set}).second) continue;
        std::vector<Term> t;
        double xcoef = -static_cast<double>(sep.violated_set.size() - 1);
        for (int f : sets.inside) {
          if (f == e) xcoef += 1.0;
          else t.push_back({model.y(e, f), 1.0});
        }
        t.push_back({model.x(e), xcoef});
        simplex.add_row("sub" + idx(e, static_cast<int>(added.size())), std::move(t), RowSense::LessEqual, 0.0);
        ++new_rows;
      }
    }
    rows_added += new_rows;
    r.trace.push_back({round, sol.objective, new_rows, since(t0)});
    if (new_rows == 0) {
      if (since(t0) >= opt.time_limit) r.status = "time_limit";
      break;
    }
    if (round + 1 == opt.max_rounds) r.status = "iteration_limit";
  }
  r.counters["rows_added"] = rows_added;
  r.counters["rounds"] = static_cast<long>(r.trace.size());
  r.seconds = since(t0);
  return r;
}

double rlt1_max_violation(const Instance& inst, std::span<const double> x, std::span<const double> y) {
  const int n = inst.n(), m = inst.m();
  if (n > 16) throw InvalidArgument("subset enumeration limited to n <= 16");
  if (static_cast<int>(x.size()) != m || y.size() != static_cast<std::size_t>(m) * m)
    throw InvalidArgument("point dimensions differ from the instance");
  auto Y = [&](int e, int f) { return y[static_cast<std::size_t>(e) * m + f]; };
  double worst = 0.0;
  double card = 0.0;
  for (int e = 0; e < m; ++e) {
    card += x[e];
    worst = std::max({worst, -x[e], std::abs(Y(e, e) - x[e])});
    double row = 0.0;
    for (int f = 0; f < m; ++f) {
      worst = std::max({worst, -Y(e, f), std::abs(Y(e, f) - Y(f, e))});
      row += Y(e, f);
    }
    worst = std::max(worst, std::abs(row - (n - 1) * x[e]));
  }
  worst = std::max(worst, std::abs(card - (n - 1)));
  std::vector<int> s;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    s.clear();
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    const auto inside = edge_sets(inst, s).inside;
    const double size = static_cast<double>(s.size());
    if (s.size() >= 2) {
      double xs = 0.0;
      for (int f : inside) xs += x[f];
      worst = std::max(worst, xs - (size - 1));
    }
    for (int e = 0; e < m; ++e) {
      double ys = 0.0;
      for (int f : inside) ys += Y(e, f);
      worst = std::max(worst, ys - (size - 1) * x[e]);
    }
  }
  return worst;
}

}  // namespace qmstp
