#include "qmstp/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <optional>
#include <thread>

#include "qmstp/error.hpp"
#include "qmstp/heuristics.hpp"
#include "qmstp/oracle.hpp"

namespace qmstp {

namespace {

std::string fmt(const char* spec, double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<BenchmarkRow> run_instance(const Instance& inst, const BenchmarkOptions& opt) {
  using Clock = std::chrono::steady_clock;
  const bool wants_exact = std::find(opt.methods.begin(), opt.methods.end(), "exact") != opt.methods.end();
  std::vector<BenchmarkRow> rows;
  std::optional<EnumerationReport> exact;
  double exact_time = 0.0;
  std::string exact_error;
  if (wants_exact) {
    const auto t0 = Clock::now();
    try {
      exact = exact_qmstp(inst);
    } catch (const Error& e) {
      exact_error = e.what();
    }
    exact_time = std::chrono::duration<double>(Clock::now() - t0).count();
  }
  double ub = std::numeric_limits<double>::quiet_NaN();
  if (opt.upper_bound) ub = *opt.upper_bound;
  else if (exact) ub = exact->optimum;
  else ub = upper_bound(inst, opt.heuristic_seed).cost;

  for (const auto& method : opt.methods) {
    BenchmarkRow row;
    row.instance = inst.name();
    row.n = inst.n();
    row.density = inst.density_percent();
    row.method = method;
    row.upper_bound = ub;
    if (method == "exact") {
      row.time_s = exact_time;
      if (exact) {
        row.bound = exact->optimum;
        row.status = "optimal";
      } else {
        row.status = "error: " + exact_error;
      }
    } else {
      const auto t0 = Clock::now();
      try {
        const auto r = compute_bound(inst, method, opt.bound);
        row.bound = r.value;
        row.status = r.status;
      } catch (const Error& e) {
        row.status = std::string("error: ") + e.what();
      }
      row.time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    if (std::isfinite(row.bound)) row.gap_pct = gap_percent(ub, row.bound);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

double gap_percent(double ub, double lb) { return 100.0 * (ub - lb) / ub; }

std::vector<BenchmarkRow> run_benchmark(const std::vector<Instance>& instances, const BenchmarkOptions& opt) {
  for (const auto& m : opt.methods)
    if (m != "exact" && !is_bound_method(m)) throw InvalidArgument("unknown method '" + m + "'");
  std::vector<std::vector<BenchmarkRow>> per(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) per[i] = run_instance(instances[i], opt);
  };
  const int workers = std::clamp(opt.workers, 1, static_cast<int>(std::max<std::size_t>(1, instances.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<BenchmarkRow> rows;
  for (auto& p : per) std::move(p.begin(), p.end(), std::back_inserter(rows));
  return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out = "instance,n,density,method,bound,time_s,gap_pct,status\n";
  for (const auto& r : rows) {
    out += csv_field(r.instance) + ',' + std::to_string(r.n) + ',' + std::to_string(r.density) + ',' +
           csv_field(r.method) + ',' + fmt("%.10g", r.bound) + ',' + fmt("%.3f", r.time_s) + ',' +
           fmt("%.4f", r.gap_pct) + ',' + csv_field(r.status) + '\n';
  }
  return out;
}

std::string benchmark_markdown(const std::vector<BenchmarkRow>& rows) {
  std::vector<std::string> methods;
  for (const auto& r : rows)
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
  std::string out = "| instance | n | d | UB |";
  std::string rule = "|---|---:|---:|---:|";
  for (const auto& m : methods) {
    out += ' ' + m + " | gap |";
    rule += "---:|---:|";
  }
  out += '\n' + rule + '\n';
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].instance == rows[i].instance) ++j;
    out += "| " + rows[i].instance + " | " + std::to_string(rows[i].n) + " | " + std::to_string(rows[i].density) +
           " | " + fmt("%.1f", rows[i].upper_bound) + " |";
    for (const auto& m : methods) {
      const auto it = std::find_if(rows.begin() + i, rows.begin() + j, [&](const auto& r) { return r.method == m; });
      if (it == rows.begin() + j || std::isnan(it->bound)) out += " - | - |";
      else out += ' ' + fmt("%.1f", it->bound) + " | " + fmt("%.2f", it->gap_pct) + " |";
    }
    out += '\n';
    i = j;
  }
  return out;
}

}  // namespace qmstp
