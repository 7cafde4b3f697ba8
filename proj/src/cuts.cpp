#include "qmstp/cuts.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <tuple>

#include "qmstp/error.hpp"
#include "qmstp/lp/simplex.hpp"

namespace qmstp {

const char* cut_kind_name(CutKind k) {
  switch (k) {
    case CutKind::UB: return "ub";
    case CutKind::Lift: return "lift";
    case CutKind::Tri1: return "tri1";
    case CutKind::Tri2: return "tri2";
  }
  return "?";
}

Cut canonical(Cut c) {
  switch (c.kind) {
    case CutKind::UB: c.g = -1; break;
    case CutKind::Lift:
      if (c.e > c.f) std::swap(c.e, c.f);
      c.g = -1;
      break;
    case CutKind::Tri1:
      if (c.e > c.f) std::swap(c.e, c.f);
      break;
    case CutKind::Tri2: {
      std::array<int, 3> v{c.e, c.f, c.g};
      std::sort(v.begin(), v.end());
      c.e = v[0];
      c.f = v[1];
      c.g = v[2];
      break;
    }
  }
  return c;
}

CutKey cut_key(const Cut& c) {
  const Cut k = canonical(c);
  return {static_cast<int>(k.kind), k.e, k.f, k.g};
}

namespace {

template <class X, class Y>
double violation_of(const Cut& c, X&& x, Y&& y) {
  switch (c.kind) {
    case CutKind::UB: return y(c.e, c.f) - x(c.e);
    case CutKind::Lift: return x(c.e) + x(c.f) - 1.0 - y(c.e, c.f);
    case CutKind::Tri1: return y(c.e, c.g) + y(c.f, c.g) - x(c.g) - y(c.e, c.f);
    case CutKind::Tri2: return x(c.e) + x(c.f) + x(c.g) - y(c.e, c.f) - y(c.e, c.g) - y(c.f, c.g) - 1.0;
  }
  return 0.0;
}

}  // namespace

double cut_violation(const Cut& c, const RelaxationPoint& pt) {
  return violation_of(c, [&](int e) { return pt.x[e]; }, [&](int e, int f) { return pt.Y(e, f); });
}

double cut_violation(const Cut& c, const std::vector<char>& inc) {
  return violation_of(
      c, [&](int e) { return inc[e] ? 1.0 : 0.0; }, [&](int e, int f) { return inc[e] && inc[f] ? 1.0 : 0.0; });
}

std::vector<lp::Term> cut_terms(const Cut& c, const QuadraticModel& q, double& rhs) {
  switch (c.kind) {
    case CutKind::UB:
      rhs = 0.0;
      return {{q.y(c.e, c.f), 1.0}, {q.x(c.e), -1.0}};
    case CutKind::Lift:
      rhs = 1.0;
      return {{q.x(c.e), 1.0}, {q.x(c.f), 1.0}, {q.y(c.e, c.f), -1.0}};
    case CutKind::Tri1:
      rhs = 0.0;
      return {{q.y(c.e, c.g), 1.0}, {q.y(c.f, c.g), 1.0}, {q.x(c.g), -1.0}, {q.y(c.e, c.f), -1.0}};
    case CutKind::Tri2:
      rhs = 1.0;
      return {{q.x(c.e), 1.0},         {q.x(c.f), 1.0},          {q.x(c.g), 1.0},
              {q.y(c.e, c.f), -1.0},   {q.y(c.e, c.g), -1.0},    {q.y(c.f, c.g), -1.0}};
  }
  return {};
}

bool CutPool::add(const Cut& c) {
  if (!keys_.insert(cut_key(c)).second) {
    ++rejected_;
    return false;
  }
  cuts_.push_back(canonical(c));
  ++counts_[static_cast<int>(c.kind)];
  return true;
}

namespace {

// Strict order: larger violation first, then (kind, e, f, g).
bool before(const Cut& a, const Cut& b) {
  if (a.violation != b.violation) return a.violation > b.violation;
  return std::make_tuple(static_cast<int>(a.kind), a.e, a.f, a.g) <
         std::make_tuple(static_cast<int>(b.kind), b.e, b.f, b.g);
}

// Keeps the `cap` best cuts; the heap top is the worst kept one.
class TopCuts {
 public:
  explicit TopCuts(std::size_t cap) : cap_(cap) {}
  void offer(const Cut& c) {
    if (cap_ == 0) return;
    if (heap_.size() < cap_) {
      heap_.push(c);
    } else if (before(c, heap_.top())) {
      heap_.pop();
      heap_.push(c);
    }
  }
  std::vector<Cut> take() {
    std::vector<Cut> out;
    while (!heap_.empty()) {
      out.push_back(heap_.top());
      heap_.pop();
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t cap_;
  std::priority_queue<Cut, std::vector<Cut>, decltype(&before)> heap_{&before};
};

}  // namespace

std::vector<Cut> separate(const RelaxationPoint& pt, CutLevel level, std::size_t batch, double cut_tol,
                          const CutPool* pool) {
  const int m = pt.m;
  TopCuts top(batch);
  auto consider = [&](Cut c) {
    c.violation = cut_violation(c, pt);
    if (c.violation > cut_tol && !(pool && pool->contains(c))) top.offer(c);
  };
  if (level == CutLevel::VS1) {
    for (int e = 0; e < m; ++e)
      for (int f = 0; f < m; ++f) {
        if (e == f) continue;
        consider({CutKind::UB, e, f, -1, 0.0});
        if (e < f) consider({CutKind::Lift, e, f, -1, 0.0});
      }
  } else {
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f)
        for (int g = 0; g < m; ++g) {
          if (g == e || g == f) continue;
          consider({CutKind::Tri1, e, f, g, 0.0});
          if (g > f) consider({CutKind::Tri2, e, f, g, 0.0});
        }
  }
  return top.take();
}

BoundResult vs_bound(const Instance& inst, CutLevel level, const CuttingPlaneOptions& opt, CutPool* pool_out) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
  BoundResult r;
  r.method = level == CutLevel::VS1 ? "vs1" : "vs2";
  const std::size_t batch = opt.batch ? opt.batch : static_cast<std::size_t>(inst.n()) * inst.m();

  auto model = build_vs0_model(inst, true);
  lp::Simplex simplex(model.lp);
  CutPool pool;
  bool vs1_done = false;
  int iteration = 0;
  for (int round = 0; round < opt.max_rounds; ++round) {
    const double remaining = opt.time_limit - elapsed();
    if (remaining <= 0) {
      r.status = "time_limit";
      break;
    }
    simplex.set_limits({.time_limit = remaining});
    const auto sol = simplex.solve();
    r.iterations += sol.iterations;
    if (!sol.optimal()) {
      r.status = std::string(lp::status_name(sol.status));
      if (sol.status != lp::Status::TimeLimit && sol.status != lp::Status::IterationLimit)
        throw Error(r.method + ": LP ended with status " + r.status);
      break;
    }
    r.value = sol.objective;
    if (round == 0) r.values["vs0"] = sol.objective;
    const auto pt = relaxation_point(model, sol.primal);

    auto cuts = vs1_done ? std::vector<Cut>{} : separate(pt, CutLevel::VS1, batch, opt.cut_tol, &pool);
    if (!vs1_done && cuts.empty()) {
      vs1_done = true;
      r.values["vs1"] = sol.objective;
      r.counters["vs1_rounds"] = round + 1;
    }
    if (vs1_done && level == CutLevel::VS2) cuts = separate(pt, CutLevel::VS2, batch, opt.cut_tol, &pool);
    for (const Cut& c : cuts) {
      if (!pool.add(c)) continue;
      double rhs = 0.0;
      auto terms = cut_terms(c, model, rhs);
      simplex.add_row(std::string(cut_kind_name(c.kind)) + "_" + std::to_string(pool.size()), std::move(terms),
                      lp::RowSense::LessEqual, rhs);
    }
    r.trace.push_back({iteration++, sol.objective, static_cast<long>(cuts.size()), elapsed()});
    if (cuts.empty()) break;
    if (round + 1 == opt.max_rounds) r.status = "iteration_limit";
  }
  r.counters["cuts_ub"] = pool.count(CutKind::UB);
  r.counters["cuts_lift"] = pool.count(CutKind::Lift);
  r.counters["cuts_tri1"] = pool.count(CutKind::Tri1);
  r.counters["cuts_tri2"] = pool.count(CutKind::Tri2);
  r.counters["duplicates_rejected"] = pool.rejected_duplicates();
  r.counters["rounds"] = static_cast<long>(r.trace.size());
  r.seconds = elapsed();
  if (pool_out) *pool_out = std::move(pool);
  return r;
}

}  // namespace qmstp
