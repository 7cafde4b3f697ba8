// qmstp command-line tool: instance generation, bounds, heuristics, the
// enumeration oracle, the invariant suite and benchmark tables.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qmstp/benchmark.hpp"
#include "qmstp/error.hpp"
#include "qmstp/extended.hpp"
#include "qmstp/heuristics.hpp"
#include "qmstp/instance.hpp"
#include "qmstp/lp/lp_format.hpp"
#include "qmstp/methods.hpp"
#include "qmstp/oracle.hpp"
#include "qmstp/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qmstp::ParseError("cannot write " + path);
  out << text;
}

std::string tree_string(const std::vector<int>& edges, const qmstp::Instance& inst) {
  std::string s;
  for (int e : edges) {
    if (!s.empty()) s += ' ';
    s += std::to_string(inst.edge(e).u) + "-" + std::to_string(inst.edge(e).v);
  }
  return s;
}

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string trace_csv(const qmstp::BoundResult& r) {
  std::string out = "iteration,bound,cuts_added,elapsed\n";
  for (const auto& p : r.trace)
    out += std::to_string(p.iteration) + ',' + number(p.bound) + ',' + std::to_string(p.cuts_added) + ',' +
           number(p.elapsed) + '\n';
  return out;
}

std::vector<qmstp::Instance> load_all(const std::vector<std::string>& paths) {
  std::vector<qmstp::Instance> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) out.push_back(qmstp::read_instance(f));
    } else {
      out.push_back(qmstp::read_instance(p));
    }
  }
  return out;
}

/// FAMILY:N:DENSITY:SEED
qmstp::Instance generate_from_tag(const std::string& tag) {
  std::vector<std::string> parts;
  std::stringstream ss(tag);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw qmstp::InvalidArgument("expected FAMILY:N:DENSITY:SEED, got '" + tag + "'");
  qmstp::GeneratorSpec spec;
  try {
    spec.family = qmstp::parse_family(parts[0]);
    spec.n = std::stoi(parts[1]);
    spec.density = std::stoi(parts[2]);
    spec.seed = std::stoull(parts[3]);
  } catch (const std::logic_error&) {
    throw qmstp::InvalidArgument("bad generator tag '" + tag + "'");
  }
  return qmstp::generate(spec);
}

void add_bound_flags(CLI::App* cmd, qmstp::BoundOptions& opt) {
  cmd->add_option("--time-limit", opt.time_limit, "Seconds for LP-based methods")->capture_default_str();
  cmd->add_option("--cut-batch", opt.cut_batch, "Cuts added per round (0 = n*m)")->capture_default_str();
  cmd->add_option("--cut-tol", opt.cut_tol, "Minimum violation of an added cut")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and heuristics for the quadratic minimum spanning tree problem"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Draw a random instance");
  std::string family = "CP1", gen_out;
  qmstp::GeneratorSpec spec;
  gen->add_option("--family", family, "CP1 CP2 CP3 CP4 OPsym OPvsym OPesym VS")->capture_default_str();
  gen->add_option("--n", spec.n, "Vertices")->capture_default_str();
  gen->add_option("--density", spec.density, "Percent of vertex pairs (33, 67, 100)")->capture_default_str();
  gen->add_option("--seed", spec.seed)->capture_default_str();
  gen->add_option("--vs-max-diag", spec.vs_max_diag)->capture_default_str();
  gen->add_option("--vs-max-offdiag", spec.vs_max_offdiag)->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // bound
  auto* bound = app.add_subcommand("bound", "Compute one lower bound");
  std::string bound_file, method = "gl", trace_out;
  qmstp::BoundOptions bound_opt;
  bound->add_option("instance", bound_file)->required();
  bound->add_option("--method", method)->check(CLI::IsMember(qmstp::bound_methods()))->capture_default_str();
  bound->add_option("--seed", bound_opt.seed, "Seed of the heuristic behind the subgradient target");
  add_bound_flags(bound, bound_opt);
  bound->add_option("--trace", trace_out, "Write the iteration trace as CSV ('-' for stdout)");

  // heuristic
  auto* heur = app.add_subcommand("heuristic", "Upper bound by tabu search or VNS");
  std::string heur_file, heur_method = "tabu";
  qmstp::TabuOptions tabu;
  heur->add_option("instance", heur_file)->required();
  heur->add_option("--method", heur_method)->check(CLI::IsMember({"tabu", "vns"}))->capture_default_str();
  heur->add_option("--iters", tabu.iterations, "Tabu iterations over all restarts")->capture_default_str();
  heur->add_option("--restarts", tabu.restarts)->capture_default_str();
  heur->add_option("--seed", tabu.seed)->capture_default_str();

  // exact
  auto* exact = app.add_subcommand("exact", "Optimum by spanning-tree enumeration");
  std::string exact_file;
  int limit_n = 9;
  exact->add_option("instance", exact_file)->required();
  exact->add_option("--limit-n", limit_n)->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "Run the invariant suite");
  std::vector<std::string> verify_files;
  qmstp::VerifyOptions verify_opt;
  ver->add_option("instances", verify_files, "Instance files or directories")->required();
  ver->add_option("--time-limit", verify_opt.time_limit)->capture_default_str();
  ver->add_option("--seed", verify_opt.seed)->capture_default_str();

  // benchmark
  auto* bench = app.add_subcommand("benchmark", "Bound and gap table");
  std::vector<std::string> bench_files, bench_tags, methods = {"gl", "vs0"};
  std::string bench_out;
  bool markdown = false;
  double fixed_ub = 0.0;
  qmstp::BenchmarkOptions bench_opt;
  bench->add_option("instances", bench_files, "Instance files or directories");
  bench->add_option("--generate", bench_tags, "FAMILY:N:DENSITY:SEED, repeatable");
  bench->add_option("--methods", methods, "Bound tags and 'exact'")->delimiter(',')->capture_default_str();
  auto* ub_opt = bench->add_option("--ub", fixed_ub, "Upper bound for gaps instead of the heuristic");
  bench->add_option("--seed", bench_opt.heuristic_seed, "Heuristic seed")->capture_default_str();
  bench->add_option("--workers", bench_opt.workers, "Instances processed concurrently")->capture_default_str();
  bench->add_flag("--markdown", markdown, "Markdown table instead of CSV");
  bench->add_option("--out", bench_out, "Output file (default stdout)");
  add_bound_flags(bench, bench_opt.bound);

  // write-lp
  auto* wlp = app.add_subcommand("write-lp", "Write a relaxation as an LP file for an external solver");
  std::string wlp_file, wlp_model = "vs0", wlp_out;
  wlp->add_option("instance", wlp_file)->required();
  wlp->add_option("--model", wlp_model)->check(CLI::IsMember({"vs0", "vs0_boxed", "tree"}))->capture_default_str();
  wlp->add_option("--out", wlp_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*gen) {
      spec.family = qmstp::parse_family(family);
      write_text(gen_out, qmstp::format_instance(qmstp::generate(spec)));
      return 0;
    }
    if (*bound) {
      const auto inst = qmstp::read_instance(bound_file);
      const auto r = qmstp::compute_bound(inst, method, bound_opt);
      std::cout << r.method << ' ' << number(r.value) << ' ' << r.status << ' ' << number(r.seconds) << "s\n";
      for (const auto& [k, v] : r.values) std::cout << "  " << k << ' ' << number(v) << '\n';
      for (const auto& [k, v] : r.counters) std::cout << "  " << k << ' ' << v << '\n';
      for (const auto& note : r.notes) std::cerr << "note: " << note << '\n';
      if (!trace_out.empty()) write_text(trace_out, trace_csv(r));
      return 0;
    }
    if (*heur) {
      const auto inst = qmstp::read_instance(heur_file);
      qmstp::HeuristicResult r = qmstp::tabu_search(inst, tabu);
      if (heur_method == "vns") {
        std::vector<double> diag(static_cast<std::size_t>(inst.m()));
        for (int e = 0; e < inst.m(); ++e) diag[e] = inst.q(e, e);
        r = qmstp::vns_polish(inst, qmstp::mst(inst, diag), {.seed = tabu.seed});
      }
      std::cout << "cost " << number(r.cost) << "\ntree " << tree_string(r.tree.edges(), inst) << '\n';
      return 0;
    }
    if (*exact) {
      const auto inst = qmstp::read_instance(exact_file);
      const auto r = qmstp::exact_qmstp(inst, limit_n);
      std::cout << "trees " << r.tree_count << "\noptimum " << number(r.optimum) << "\ntree "
                << tree_string(r.best_tree, inst) << '\n';
      return 0;
    }
    if (*ver) {
      bool ok = true;
      for (const auto& inst : load_all(verify_files)) {
        const auto checks = qmstp::verify(inst, verify_opt);
        std::cout << "# " << inst.name() << " (n=" << inst.n() << ", m=" << inst.m() << ")\n"
                  << qmstp::format_checks(checks);
        ok = ok && qmstp::all_passed(checks);
      }
      return ok ? 0 : kVerificationFailed;
    }
    if (*bench) {
      auto instances = load_all(bench_files);
      for (const auto& tag : bench_tags) instances.push_back(generate_from_tag(tag));
      if (instances.empty()) throw qmstp::InvalidArgument("no instances given");
      bench_opt.methods = methods;
      if (*ub_opt) bench_opt.upper_bound = fixed_ub;
      const auto rows = qmstp::run_benchmark(instances, bench_opt);
      write_text(bench_out, markdown ? qmstp::benchmark_markdown(rows) : qmstp::benchmark_csv(rows));
      return 0;
    }
    if (*wlp) {
      const auto inst = qmstp::read_instance(wlp_file);
      if (wlp_model == "tree") {
        std::vector<double> diag(static_cast<std::size_t>(inst.m()));
        for (int e = 0; e < inst.m(); ++e) diag[e] = inst.q(e, e);
        write_text(wlp_out, qmstp::lp::format_model(qmstp::extended_mst_model(inst, diag)));
      } else {
        write_text(wlp_out, qmstp::lp::format_model(qmstp::build_vs0_model(inst, wlp_model == "vs0_boxed").lp));
      }
      return 0;
    }
  } catch (const qmstp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
