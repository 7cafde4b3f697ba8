#include "qmstp/lp/simplex.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>

#include "qmstp/error.hpp"

namespace qmstp::lp {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    case Status::IterationLimit: return "iteration_limit";
    case Status::TimeLimit: return "time_limit";
  }
  return "unknown";
}

Tolerances default_tolerances() {
  Tolerances t;
  if (const char* s = std::getenv("QMSTP_FEAS_TOL")) {
    if (const double v = std::strtod(s, nullptr); v > 0) t.feas = v;
  }
  if (const char* s = std::getenv("QMSTP_OPT_TOL")) {
    if (const double v = std::strtod(s, nullptr); v > 0) t.opt = v;
  }
  return t;
}

bool LpSolution::certified(const Tolerances& tol) const {
  return optimal() && primal_residual <= tol.feas && dual_residual <= tol.feas * (1.0 + std::abs(objective)) &&
         duality_gap <= tol.opt * (1.0 + std::abs(objective));
}

namespace {

std::mutex g_audit_mutex;
CertificateAudit g_audit;

void record_audit(const LpSolution& s) {
  if (!s.optimal()) return;
  std::lock_guard lock(g_audit_mutex);
  ++g_audit.optimal_solves;
  g_audit.worst_primal_residual = std::max(g_audit.worst_primal_residual, s.primal_residual);
  g_audit.worst_dual_residual = std::max(g_audit.worst_dual_residual, s.dual_residual);
  g_audit.worst_relative_gap =
      std::max(g_audit.worst_relative_gap, s.duality_gap / (1.0 + std::abs(s.objective)));
}

enum class VarState : unsigned char { Basic, Lower, Upper, Zero };

using SparseCol = std::vector<std::pair<int, double>>;
using Clock = std::chrono::steady_clock;

// Internal tolerances; tighter than the certificate tolerances.
constexpr double kPrimalTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kZeroTol = 1e-13;
constexpr int kRefactorEvery = 80;
constexpr int kDegenerateLimit = 60;

}  // namespace

struct Simplex::Engine {
  LinearProgram model;
  Limits limits;

  int ns = 0;  // structural variables
  int nr = 0;  // rows (one logical variable each, index ns + i)
  std::vector<SparseCol> cols;
  std::vector<double> lo, up, cost;
  std::vector<VarState> state;
  std::vector<int> head;  // basic variable in each row position
  std::vector<int> pos;   // row position of a basic variable, -1 otherwise
  std::vector<double> x;
  double dual_tol = kDualTol;

  mutable Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  struct Eta {
    int r;
    double pivot;
    SparseCol col;
  };
  std::vector<Eta> etas;
  bool factored = false;

  Clock::time_point started;
  long iterations = 0;

  Engine(LinearProgram lp, Limits lim) : model(std::move(lp)), limits(lim) {
    model.validate();
    ns = model.num_variables();
    cols.resize(static_cast<std::size_t>(ns));
    lo.reserve(ns + model.num_rows());
    double cmax = 0.0;
    const double sign = model.sense() == ObjectiveSense::Maximize ? -1.0 : 1.0;
    for (const auto& v : model.variables()) {
      lo.push_back(v.lower);
      up.push_back(v.upper);
      cost.push_back(sign * v.cost);
      cmax = std::max(cmax, std::abs(v.cost));
    }
    dual_tol = kDualTol * std::max(1.0, cmax);
    for (int j = 0; j < ns; ++j) {
      state.push_back(initial_state(j));
      x.push_back(nonbasic_value(j));
      pos.push_back(-1);
    }
    for (int i = 0; i < model.num_rows(); ++i) append_row_storage(i);
  }

  VarState initial_state(int j) const {
    const bool fl = std::isfinite(lo[j]), fu = std::isfinite(up[j]);
    if (fl && fu) return cost[j] >= 0 ? VarState::Lower : VarState::Upper;
    if (fl) return VarState::Lower;
    if (fu) return VarState::Upper;
    return VarState::Zero;
  }

  double nonbasic_value(int j) const {
    switch (state[j]) {
      case VarState::Lower: return lo[j];
      case VarState::Upper: return up[j];
      default: return 0.0;
    }
  }

  void append_row_storage(int i) {
    const Row& row = model.row(i);
    for (const auto& t : row.terms) cols[static_cast<std::size_t>(t.var)].push_back({i, t.coef});
    double l = -kInf, u = kInf;
    switch (row.sense) {
      case RowSense::LessEqual: u = row.rhs; break;
      case RowSense::GreaterEqual: l = row.rhs; break;
      case RowSense::Equal: l = u = row.rhs; break;
    }
    lo.push_back(l);
    up.push_back(u);
    cost.push_back(0.0);
    state.push_back(VarState::Basic);
    pos.push_back(i);
    head.push_back(ns + i);
    double act = 0.0;
    for (const auto& t : row.terms) act += t.coef * x[static_cast<std::size_t>(t.var)];
    x.push_back(act);
    ++nr;
  }

  int add_row(std::string name, std::vector<Term> terms, RowSense sense, double rhs) {
    const int i = model.add_row(std::move(name), std::move(terms), sense, rhs);
    for (const auto& t : model.row(i).terms) {
      if (t.var < 0 || t.var >= ns) throw InvalidArgument("row references unknown variable");
      if (!std::isfinite(t.coef)) throw InvalidArgument("non-finite coefficient");
    }
    // Logical variables sit after structurals, so the new one is index ns + nr.
    append_row_storage(i);
    factored = false;
    return i;
  }

  // ---------------------------------------------------------------- algebra

  template <class F>
  void for_column(int j, F&& f) const {
    if (j < ns) {
      for (const auto& [i, v] : cols[static_cast<std::size_t>(j)]) f(i, v);
    } else {
      f(j - ns, -1.0);
    }
  }

  double dot_column(int j, const Eigen::VectorXd& y) const {
    if (j >= ns) return -y[j - ns];
    double s = 0.0;
    for (const auto& [i, v] : cols[static_cast<std::size_t>(j)]) s += v * y[i];
    return s;
  }

  bool factorize() {
    Eigen::SparseMatrix<double> b(nr, nr);
    std::vector<Eigen::Triplet<double>> trip;
    for (int p = 0; p < nr; ++p) for_column(head[p], [&](int i, double v) { trip.emplace_back(i, p, v); });
    b.setFromTriplets(trip.begin(), trip.end());
    b.makeCompressed();
    lu.analyzePattern(b);
    lu.factorize(b);
    etas.clear();
    return lu.info() == Eigen::Success;
  }

  void reset_to_slack_basis() {
    for (int j = 0; j < ns + nr; ++j) {
      if (j >= ns) {
        state[j] = VarState::Basic;
        pos[j] = j - ns;
        head[j - ns] = j;
        continue;
      }
      pos[j] = -1;
      const bool fl = std::isfinite(lo[j]), fu = std::isfinite(up[j]);
      if (fl && fu) state[j] = std::abs(x[j] - lo[j]) <= std::abs(x[j] - up[j]) ? VarState::Lower : VarState::Upper;
      else if (fl) state[j] = VarState::Lower;
      else if (fu) state[j] = VarState::Upper;
      else state[j] = VarState::Zero;
      x[j] = nonbasic_value(j);
    }
  }

  void refactor() {
    if (nr == 0) {
      factored = true;
      return;
    }
    if (!factorize()) {
      reset_to_slack_basis();
      if (!factorize()) throw Error("simplex: slack basis factorisation failed");
    }
    factored = true;
    recompute_basic_values();
  }

  void ftran(Eigen::VectorXd& v) const {
    v = lu.solve(v);
    for (const Eta& e : etas) {
      const double vr = v[e.r] / e.pivot;
      v[e.r] = vr;
      if (vr != 0.0)
        for (const auto& [i, a] : e.col) v[i] -= a * vr;
    }
  }

  void btran(Eigen::VectorXd& v) const {
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      double s = v[it->r];
      for (const auto& [i, a] : it->col) s -= a * v[i];
      v[it->r] = s / it->pivot;
    }
    v = lu.transpose().solve(v);
  }

  void recompute_basic_values() {
    if (nr == 0) return;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nr);
    for (int j = 0; j < ns + nr; ++j) {
      if (state[j] == VarState::Basic || x[j] == 0.0) continue;
      const double xj = x[j];
      for_column(j, [&](int i, double v) { rhs[i] -= v * xj; });
    }
    ftran(rhs);
    for (int p = 0; p < nr; ++p) x[head[p]] = rhs[p];
  }

  Eigen::VectorXd column(int j) const {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(nr);
    for_column(j, [&](int i, double v) { a[i] = v; });
    return a;
  }

  void pivot(int r, int q, const Eigen::VectorXd& alpha, VarState leaving_state) {
    const int p = head[r];
    Eta eta{r, alpha[r], {}};
    for (int i = 0; i < nr; ++i)
      if (i != r && std::abs(alpha[i]) > kZeroTol) eta.col.push_back({i, alpha[i]});
    etas.push_back(std::move(eta));
    head[r] = q;
    pos[q] = r;
    state[q] = VarState::Basic;
    pos[p] = -1;
    state[p] = leaving_state;
    x[p] = nonbasic_value(p);
    if (static_cast<int>(etas.size()) >= kRefactorEvery) refactor();
  }

  double infeasibility(int j) const {
    if (x[j] < lo[j] - kPrimalTol * (1 + std::abs(lo[j]))) return lo[j] - x[j];
    if (x[j] > up[j] + kPrimalTol * (1 + std::abs(up[j]))) return x[j] - up[j];
    return 0.0;
  }

  bool out_of_time() const {
    if (!std::isfinite(limits.time_limit)) return false;
    return std::chrono::duration<double>(Clock::now() - started).count() > limits.time_limit;
  }

  // Reduced costs for every variable under the given basic cost vector.
  std::vector<double> reduced_costs(const Eigen::VectorXd& cb_in, bool phase_two,
                                    Eigen::VectorXd* y_out = nullptr) const {
    Eigen::VectorXd y = cb_in;
    if (nr > 0) btran(y);
    std::vector<double> d(static_cast<std::size_t>(ns + nr), 0.0);
    for (int j = 0; j < ns + nr; ++j) {
      if (state[j] == VarState::Basic) continue;
      d[j] = (phase_two ? cost[j] : 0.0) - (nr > 0 ? dot_column(j, y) : 0.0);
    }
    if (y_out) *y_out = std::move(y);
    return d;
  }

  Eigen::VectorXd basic_costs() const {
    Eigen::VectorXd cb(nr);
    for (int p = 0; p < nr; ++p) cb[p] = cost[head[p]];
    return cb;
  }

  // ------------------------------------------------------------ primal

  Status primal() {
    int degenerate = 0;
    bool bland = false;
    while (true) {
      if (iterations >= limits.max_iterations) return Status::IterationLimit;
      if (out_of_time()) return Status::TimeLimit;
      if (!factored) refactor();

      // Phase 1 costs push infeasible basics toward their violated bound.
      Eigen::VectorXd cb = Eigen::VectorXd::Zero(nr);
      bool infeasible = false;
      for (int p = 0; p < nr; ++p) {
        const int j = head[p];
        if (infeasibility(j) > 0) {
          infeasible = true;
          cb[p] = x[j] < lo[j] ? -1.0 : 1.0;
        }
      }
      if (!infeasible) cb = basic_costs();
      const auto d = reduced_costs(cb, !infeasible);
      const double dtol = infeasible ? kDualTol : dual_tol;

      int q = -1;
      double best = 0.0;
      int dir = 0;
      for (int j = 0; j < ns + nr; ++j) {
        if (state[j] == VarState::Basic || lo[j] == up[j]) continue;
        int dj = 0;
        if (state[j] == VarState::Lower && d[j] < -dtol) dj = 1;
        else if (state[j] == VarState::Upper && d[j] > dtol) dj = -1;
        else if (state[j] == VarState::Zero && std::abs(d[j]) > dtol) dj = d[j] < 0 ? 1 : -1;
        if (dj == 0) continue;
        if (bland) {
          q = j;
          dir = dj;
          break;
        }
        if (std::abs(d[j]) > best) {
          best = std::abs(d[j]);
          q = j;
          dir = dj;
        }
      }
      if (q < 0) {
        if (!infeasible) return Status::Optimal;
        // Confirm on a fresh factorisation before declaring infeasibility.
        if (!etas.empty()) {
          refactor();
          bool still = false;
          for (int p = 0; p < nr; ++p) still = still || infeasibility(head[p]) > 0;
          if (still) continue;
          continue;
        }
        return Status::Infeasible;
      }

      Eigen::VectorXd alpha = column(q);
      ftran(alpha);

      // Ratio test. Basic value in row p moves at rate -dir * alpha[p].
      const double flip = (std::isfinite(lo[q]) && std::isfinite(up[q])) ? up[q] - lo[q] : kInf;
      auto block_bound = [&](int p, double rate, bool relaxed, double& bound_out) -> double {
        const int j = head[p];
        const double v = x[j];
        const double tol = relaxed ? kPrimalTol * (1 + std::abs(v)) : 0.0;
        if (rate < 0) {
          double b = -kInf;
          if (infeasible && v > up[j]) b = up[j];
          else if (v >= lo[j] - kPrimalTol * (1 + std::abs(lo[j]))) b = lo[j];
          if (!std::isfinite(b)) return kInf;
          bound_out = b;
          return (v - b + tol) / -rate;
        }
        double b = kInf;
        if (infeasible && v < lo[j]) b = lo[j];
        else if (v <= up[j] + kPrimalTol * (1 + std::abs(up[j]))) b = up[j];
        if (!std::isfinite(b)) return kInf;
        bound_out = b;
        return (b - v + tol) / rate;
      };

      double tmax = flip;
      if (!bland) {
        for (int p = 0; p < nr; ++p) {
          if (std::abs(alpha[p]) <= kPivotTol) continue;
          double b;
          tmax = std::min(tmax, block_bound(p, -dir * alpha[p], true, b));
        }
      }
      int r = -1;
      double t = kInf, rbound = 0.0, rpiv = 0.0;
      for (int p = 0; p < nr; ++p) {
        if (std::abs(alpha[p]) <= kPivotTol) continue;
        double b = 0.0;
        const double ratio = block_bound(p, -dir * alpha[p], false, b);
        if (!std::isfinite(ratio)) continue;
        if (bland) {
          if (ratio < t - kZeroTol || (ratio <= t + kZeroTol && r >= 0 && head[p] < head[r])) {
            t = ratio;
            r = p;
            rbound = b;
          }
        } else if (ratio <= tmax && std::abs(alpha[p]) > rpiv) {
          rpiv = std::abs(alpha[p]);
          r = p;
          t = ratio;
          rbound = b;
        }
      }
      if (r >= 0 && bland && flip < t) r = -1;

      ++iterations;
      if (r < 0) {
        if (!std::isfinite(flip)) {
          if (infeasible) {
            refactor();
            continue;
          }
          return Status::Unbounded;
        }
        // Bound flip of the entering variable.
        const double step = dir * flip;
        x[q] += step;
        state[q] = state[q] == VarState::Lower ? VarState::Upper : VarState::Lower;
        x[q] = nonbasic_value(q);
        for (int p = 0; p < nr; ++p) x[head[p]] -= step * alpha[p];
        degenerate = 0;
        bland = false;
        continue;
      }
      t = std::max(t, 0.0);
      const double step = dir * t;
      for (int p = 0; p < nr; ++p) x[head[p]] -= step * alpha[p];
      x[q] += step;
      const int leaving = head[r];
      const VarState ls = rbound == lo[leaving] ? VarState::Lower : VarState::Upper;
      const double xq = x[q];
      pivot(r, q, alpha, ls);
      if (factored && pos[q] >= 0 && etas.size() > 0) x[q] = xq;

      if (t <= 1e-12) {
        if (++degenerate > kDegenerateLimit) bland = true;
      } else {
        degenerate = 0;
        bland = false;
      }
    }
  }

  // ------------------------------------------------------------ dual

  // Makes nonbasic boxed variables sit at the bound matching their reduced
  // cost sign. Returns false if the basis cannot be made dual feasible.
  bool make_dual_feasible(std::vector<double>& d) {
    bool moved = false;
    for (int j = 0; j < ns + nr; ++j) {
      if (state[j] == VarState::Basic || lo[j] == up[j]) continue;
      if (state[j] == VarState::Lower && d[j] < -dual_tol) {
        if (!std::isfinite(up[j])) return false;
        state[j] = VarState::Upper;
        x[j] = up[j];
        moved = true;
      } else if (state[j] == VarState::Upper && d[j] > dual_tol) {
        if (!std::isfinite(lo[j])) return false;
        state[j] = VarState::Lower;
        x[j] = lo[j];
        moved = true;
      } else if (state[j] == VarState::Zero && std::abs(d[j]) > dual_tol) {
        return false;
      }
    }
    if (moved) recompute_basic_values();
    return true;
  }

  Status dual() {
    if (!factored) refactor();
    auto d = reduced_costs(basic_costs(), true);
    if (!make_dual_feasible(d)) return Status::IterationLimit;
    const long cap = iterations + 20L * (ns + nr) + 1000;
    long since_refresh = 0;
    while (true) {
      if (iterations >= limits.max_iterations) return Status::IterationLimit;
      if (out_of_time()) return Status::TimeLimit;
      if (iterations >= cap) return Status::IterationLimit;
      if (!factored || since_refresh >= kRefactorEvery) {
        if (!factored) refactor();
        d = reduced_costs(basic_costs(), true);
        since_refresh = 0;
        if (!make_dual_feasible(d)) return Status::IterationLimit;
      }

      int r = -1;
      double worst = 0.0;
      for (int p = 0; p < nr; ++p) {
        const double inf = infeasibility(head[p]);
        if (inf > worst) {
          worst = inf;
          r = p;
        }
      }
      if (r < 0) return Status::Optimal;
      const int leaving = head[r];
      const bool to_lower = x[leaving] < lo[leaving];
      const double target = to_lower ? lo[leaving] : up[leaving];
      const double sigma = to_lower ? 1.0 : -1.0;

      Eigen::VectorXd rho = Eigen::VectorXd::Zero(nr);
      rho[r] = 1.0;
      btran(rho);
      std::vector<double> arow(static_cast<std::size_t>(ns + nr), 0.0);
      double tmax = kInf;
      for (int j = 0; j < ns + nr; ++j) {
        if (state[j] == VarState::Basic || lo[j] == up[j]) continue;
        const double a = dot_column(j, rho);
        arow[j] = a;
        if (!eligible(j, a, sigma)) continue;
        tmax = std::min(tmax, (std::abs(d[j]) + dual_tol) / std::abs(a));
      }
      int q = -1;
      double qa = 0.0;
      for (int j = 0; j < ns + nr; ++j) {
        if (state[j] == VarState::Basic || lo[j] == up[j]) continue;
        const double a = arow[j];
        if (!eligible(j, a, sigma)) continue;
        const double ratio = std::abs(d[j]) / std::abs(a);
        if (ratio <= tmax && std::abs(a) > qa) {
          qa = std::abs(a);
          q = j;
        }
      }
      if (q < 0) return Status::Infeasible;

      Eigen::VectorXd alpha = column(q);
      ftran(alpha);
      if (std::abs(alpha[r]) <= kPivotTol ||
          std::abs(alpha[r] - arow[q]) > 1e-7 * (1 + std::abs(arow[q]))) {
        if (etas.empty()) return Status::IterationLimit;
        refactor();
        since_refresh = kRefactorEvery;
        continue;
      }
      ++iterations;
      ++since_refresh;
      const double t = (x[leaving] - target) / alpha[r];
      for (int p = 0; p < nr; ++p) x[head[p]] -= t * alpha[p];
      x[q] += t;
      const double s = d[q] / alpha[r];
      for (int j = 0; j < ns + nr; ++j)
        if (state[j] != VarState::Basic && arow[j] != 0.0) d[j] -= s * arow[j];
      d[q] = 0.0;
      d[leaving] = -s;
      const double xq = x[q];
      pivot(r, q, alpha, to_lower ? VarState::Lower : VarState::Upper);
      if (!etas.empty()) x[q] = xq;
      if (etas.empty()) since_refresh = kRefactorEvery;  // refactored inside pivot
    }
  }

  bool eligible(int j, double a, double sigma) const {
    if (std::abs(a) <= kPivotTol) return false;
    switch (state[j]) {
      case VarState::Lower: return sigma * a < 0;
      case VarState::Upper: return sigma * a > 0;
      case VarState::Zero: return true;
      default: return false;
    }
  }

  // ------------------------------------------------------------ driver

  LpSolution solve() {
    started = Clock::now();
    const long start_iterations = iterations;
    Status status = Status::Optimal;
    if (nr > 0) {
      if (!factored) refactor();
      bool primal_infeasible = false;
      for (int p = 0; p < nr && !primal_infeasible; ++p) primal_infeasible = infeasibility(head[p]) > 0;
      if (primal_infeasible) {
        status = dual();
        if (status == Status::TimeLimit || iterations >= limits.max_iterations) return finish(status, start_iterations);
      }
      status = primal();
    } else {
      // No rows: every variable sits at its cheapest bound.
      for (int j = 0; j < ns; ++j) {
        if (cost[j] > 0) {
          if (!std::isfinite(lo[j])) return finish(Status::Unbounded, start_iterations);
          state[j] = VarState::Lower;
        } else if (cost[j] < 0) {
          if (!std::isfinite(up[j])) return finish(Status::Unbounded, start_iterations);
          state[j] = VarState::Upper;
        }
        x[j] = nonbasic_value(j);
      }
    }
    return finish(status, start_iterations);
  }

  LpSolution finish(Status status, long start_iterations) {
    LpSolution sol;
    sol.status = status;
    sol.iterations = iterations - start_iterations;
    if (nr > 0) {
      refactor();
    }
    sol.primal.assign(x.begin(), x.begin() + ns);
    sol.objective = model.objective_value(sol.primal);
    const double sign = model.sense() == ObjectiveSense::Maximize ? -1.0 : 1.0;

    Eigen::VectorXd y = Eigen::VectorXd::Zero(nr);
    std::vector<double> d(static_cast<std::size_t>(ns + nr), 0.0);
    if (nr > 0) {
      d = reduced_costs(basic_costs(), true, &y);
    } else {
      for (int j = 0; j < ns; ++j) d[j] = cost[j];
    }
    sol.dual.resize(static_cast<std::size_t>(nr));
    for (int i = 0; i < nr; ++i) sol.dual[i] = sign * y[i];
    sol.reduced_costs.resize(static_cast<std::size_t>(ns));
    for (int j = 0; j < ns; ++j) sol.reduced_costs[j] = sign * d[j];

    sol.primal_residual = model.max_violation(sol.primal);
    double dual_obj = 0.0, dres = 0.0, primal_obj = 0.0;
    for (int j = 0; j < ns + nr; ++j) {
      primal_obj += cost[j] * x[j];
      const double dj = d[j];
      double bound = x[j];
      if (dj > 0 && std::isfinite(lo[j])) bound = lo[j];
      else if (dj < 0 && std::isfinite(up[j])) bound = up[j];
      dual_obj += dj * bound;
      if (dj > 0 && !std::isfinite(lo[j])) dres = std::max(dres, dj);
      if (dj < 0 && !std::isfinite(up[j])) dres = std::max(dres, -dj);
    }
    sol.dual_residual = dres;
    sol.duality_gap = std::abs(primal_obj - dual_obj);
    sol.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    record_audit(sol);
    return sol;
  }
};

Simplex::Simplex(LinearProgram lp, Limits limits) : engine_(std::make_unique<Engine>(std::move(lp), limits)) {}
Simplex::~Simplex() = default;
Simplex::Simplex(Simplex&&) noexcept = default;
Simplex& Simplex::operator=(Simplex&&) noexcept = default;

LpSolution Simplex::solve() { return engine_->solve(); }

int Simplex::add_row(std::string name, std::vector<Term> terms, RowSense sense, double rhs) {
  return engine_->add_row(std::move(name), std::move(terms), sense, rhs);
}

void Simplex::set_limits(Limits limits) { engine_->limits = limits; }
const LinearProgram& Simplex::model() const { return engine_->model; }

LpSolution solve(const LinearProgram& lp, Limits limits) {
  Simplex s(lp, limits);
  return s.solve();
}

CertificateAudit certificate_audit() {
  std::lock_guard lock(g_audit_mutex);
  return g_audit;
}

void reset_certificate_audit() {
  std::lock_guard lock(g_audit_mutex);
  g_audit = {};
}

}  // namespace qmstp::lp
