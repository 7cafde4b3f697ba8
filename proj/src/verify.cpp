#include "qmstp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "qmstp/cuts.hpp"
#include "qmstp/error.hpp"
#include "qmstp/extended.hpp"
#include "qmstp/gl_bounds.hpp"
#include "qmstp/heuristics.hpp"
#include "qmstp/lp/simplex.hpp"
#include "qmstp/oracle.hpp"
#include "qmstp/rng.hpp"

namespace qmstp {

namespace {

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

class Report {
 public:
  void add(std::string name, bool ok, std::string detail) {
    checks_.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string why) { checks_.push_back({std::move(name), Verdict::Skip, std::move(why)}); }
  /// lhs <= rhs + tol * (1 + |rhs|)
  void le(std::string name, const std::string& ln, double l, const std::string& rn, double r, double tol) {
    add(std::move(name), l <= r + tol * (1.0 + std::abs(r)), ln + " " + num(l) + " <= " + rn + " " + num(r));
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

bool trace_nondecreasing(const BoundResult& r, double slack) {
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    if (r.trace[i].bound < r.trace[i - 1].bound - slack) return false;
  return true;
}

std::vector<SpanningTree> sample_trees(const Instance& inst, std::uint64_t seed, int count) {
  std::vector<SpanningTree> trees;
  std::vector<double> diag(static_cast<std::size_t>(inst.m()));
  for (int e = 0; e < inst.m(); ++e) diag[e] = inst.q(e, e);
  trees.push_back(mst(inst, diag));
  Rng rng(stream_seed(seed, "verify-trees"));
  std::vector<double> w(diag.size());
  for (int t = 1; t < count; ++t) {
    for (double& x : w) x = rng.uniform01();
    auto tree = mst(inst, w);
    if (std::find(trees.begin(), trees.end(), tree) == trees.end()) trees.push_back(std::move(tree));
  }
  return trees;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

bool all_passed(const std::vector<Check>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::Fail; });
}

std::string format_checks(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) out += std::string("[") + verdict_name(c.verdict) + "] " + c.name + ": " + c.detail + "\n";
  return out;
}

std::vector<Check> verify(const Instance& inst, const VerifyOptions& opt) {
  Report rep;
  const double tol = opt.tol;
  lp::reset_certificate_audit();

  // Tree points in the relaxation models.
  {
    const auto trees = sample_trees(inst, opt.seed, 20);
    const auto model = build_vs0_model(inst, true);
    const int m = inst.m();
    double worst_row = 0.0, worst_obj = 0.0, worst_rlt = 0.0, worst_cut = 0.0;
    for (const auto& t : trees) {
      const auto point = tree_point(model, inst, t);
      worst_row = std::max(worst_row, model.lp.max_violation(point));
      const double cost = quadratic_cost(inst, t);
      worst_obj = std::max(worst_obj, std::abs(model.lp.objective_value(point) - cost) / (1.0 + std::abs(cost)));
      std::vector<double> x(static_cast<std::size_t>(m)), y(static_cast<std::size_t>(m) * m);
      for (int e = 0; e < m; ++e) {
        x[e] = t.contains(e);
        for (int f = 0; f < m; ++f) y[static_cast<std::size_t>(e) * m + f] = t.contains(e) && t.contains(f);
      }
      if (inst.n() <= 16) worst_rlt = std::max(worst_rlt, rlt1_max_violation(inst, x, y));
      if (m <= 45) {
        for (int e = 0; e < m; ++e)
          for (int f = 0; f < m; ++f) {
            if (f == e) continue;
            worst_cut = std::max(worst_cut, cut_violation({CutKind::UB, e, f, -1, 0}, t.incidence()));
            worst_cut = std::max(worst_cut, cut_violation({CutKind::Lift, e, f, -1, 0}, t.incidence()));
            for (int g = 0; g < m; ++g) {
              if (g == e || g == f) continue;
              worst_cut = std::max(worst_cut, cut_violation({CutKind::Tri1, e, f, g, 0}, t.incidence()));
              worst_cut = std::max(worst_cut, cut_violation({CutKind::Tri2, e, f, g, 0}, t.incidence()));
            }
          }
      }
    }
    const std::string count = std::to_string(trees.size()) + " trees";
    rep.add("tree_points_feasible", worst_row <= 1e-9, count + ", worst row violation " + num(worst_row));
    rep.add("tree_point_objective", worst_obj <= 1e-9, count + ", worst relative objective error " + num(worst_obj));
    if (inst.n() <= 16) rep.add("tree_points_rlt1", worst_rlt <= 1e-9, count + ", worst violation " + num(worst_rlt));
    else rep.skip("tree_points_rlt1", "n > 16");
    if (m <= 45) rep.add("tree_points_cuts", worst_cut <= 1e-9, count + ", worst cut violation " + num(worst_cut));
    else rep.skip("tree_points_cuts", "m > 45");
  }

  std::map<std::string, double> bounds;
  auto run = [&](const std::string& name, auto&& fn) -> std::optional<BoundResult> {
    try {
      BoundResult r = fn();
      bounds[name] = r.value;
      return r;
    } catch (const Error& e) {
      rep.add(name + "_runs", false, e.what());
      return std::nullopt;
    }
  };

  const auto heur = upper_bound(inst, opt.seed);
  const auto gl = run("gl", [&] { return gl_bound(inst); });
  const auto ax = run("ax", [&] { return assad_xu(inst); });
  run("op", [&] { return oncan_punnen(inst, {.upper_bound = heur.cost, .seed = opt.seed}); });
  const auto vs0 = run("vs0", [&] { return vs0_bound(inst); });
  CutPool pool1, pool2;
  CuttingPlaneOptions cp;
  cp.time_limit = opt.time_limit;
  const auto vs1 = run("vs1", [&] { return vs_bound(inst, CutLevel::VS1, cp, &pool1); });
  const auto vs2 = run("vs2", [&] { return vs_bound(inst, CutLevel::VS2, cp, &pool2); });
  const auto rlt = run("rlt1", [&] { return rlt1_incomplete_bound(inst, {.time_limit = opt.time_limit}); });

  if (gl && ax) rep.add("ax_first_equals_gl", ax->trace.front().bound == gl->value,
                        "AX(0) " + num(ax->trace.front().bound) + ", GL " + num(gl->value));
  if (gl && ax) rep.le("ax_ge_gl", "GL", gl->value, "AX", ax->value, 1e-9);
  if (gl && rlt) rep.le("gl_le_rlt1", "GL", gl->value, "RLT1", rlt->value, tol);
  if (vs0 && vs1) rep.le("vs0_le_vs1", "VS0", vs0->value, "VS1", vs1->value, tol);
  if (vs1 && vs2) rep.le("vs1_le_vs2", "VS1", vs1->value, "VS2", vs2->value, tol);
  for (const auto* r : {&vs1, &vs2})
    if (*r) rep.add((*r)->method + "_trace_monotone", trace_nondecreasing(**r, 1e-9),
                    std::to_string((*r)->trace.size()) + " trace points");
  for (const auto* p : {&pool1, &pool2}) {
    std::set<CutKey> keys;
    for (const Cut& c : p->cuts()) keys.insert(cut_key(c));
    rep.add(std::string(p == &pool1 ? "vs1" : "vs2") + "_no_duplicate_cuts",
            keys.size() == p->size() && p->rejected_duplicates() == 0,
            std::to_string(p->size()) + " cuts, " + std::to_string(p->rejected_duplicates()) + " duplicates offered");
  }

  if (inst.is_complete()) {
    const auto lbb = run("lbb", [&] { return lbb_bound(inst); });
    if (lbb && vs0) {
      const double diff = std::abs(lbb->value - vs0->value);
      rep.add("lbb_equals_vs0", diff <= tol * (1.0 + std::abs(vs0->value)),
              "LBB " + num(lbb->value) + ", VS0 " + num(vs0->value));
    }
    const auto a = inst.m() >= 3 ? weak_sum_decompose(inst) : std::nullopt;
    if (lbb && a) {
      // For a weak sum Q every tree costs p(T), so MST(p) is the optimum.
      const auto p = linearization_vector(inst, *a);
      const double opt_value = mst(inst, p).linear_cost(p);
      rep.add("lbb_tight", std::abs(lbb->value - opt_value) <= tol * (1.0 + std::abs(opt_value)),
              "weak sum Q: LBB " + num(lbb->value) + ", MST(p) " + num(opt_value));
    } else {
      rep.skip("lbb_tight", "Q is not a weak sum matrix");
    }
  } else {
    rep.skip("lbb_equals_vs0", "graph is not complete");
    rep.skip("lbb_tight", "graph is not complete");
  }

  if (inst.n() <= opt.oracle_limit_n) {
    const auto ex = exact_qmstp(inst, opt.oracle_limit_n);
    for (const auto& [name, v] : bounds) rep.le(name + "_le_optimum", name, v, "optimum", ex.optimum, tol);
    rep.add("heuristic_ge_optimum", heur.cost >= ex.optimum - 1e-9,
            "UB " + num(heur.cost) + ", optimum " + num(ex.optimum));
  } else {
    for (const auto& [name, v] : bounds) rep.le(name + "_le_heuristic", name, v, "UB", heur.cost, tol);
    rep.skip("heuristic_ge_optimum", "n above the enumeration limit");
  }

  const auto audit = lp::certificate_audit();
  const auto tols = lp::default_tolerances();
  rep.add("lp_certificates",
          audit.worst_primal_residual <= tols.feas && audit.worst_relative_gap <= tols.opt,
          std::to_string(audit.optimal_solves) + " optimal solves, worst primal residual " +
              num(audit.worst_primal_residual) + ", worst relative gap " + num(audit.worst_relative_gap));
  return rep.take();
}

}  // namespace qmstp
