#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qmstp/benchmark.hpp"
#include "qmstp/error.hpp"
#include "qmstp/extended.hpp"
#include "qmstp/heuristics.hpp"
#include "qmstp/instance.hpp"
#include "qmstp/lp/lp_format.hpp"
#include "qmstp/methods.hpp"
#include "qmstp/oracle.hpp"
#include "qmstp/verify.hpp"

namespace py = pybind11;
using namespace qmstp;

namespace {

Instance make_instance(int n, const std::vector<std::pair<int, int>>& edges,
                       py::array_t<double, py::array::c_style | py::array::forcecast> q, std::string name) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  const auto m = static_cast<py::ssize_t>(es.size());
  if (q.ndim() != 2 || q.shape(0) != m || q.shape(1) != m)
    throw InvalidArgument("q must be an m x m array with m = " + std::to_string(m));
  std::vector<double> flat(q.data(), q.data() + m * m);
  return Instance(n, std::move(es), std::move(flat), std::move(name));
}

py::array_t<double> cost_matrix(const Instance& inst) {
  const auto m = static_cast<py::ssize_t>(inst.m());
  py::array_t<double> out({m, m});
  std::copy(inst.matrix().begin(), inst.matrix().end(), out.mutable_data());
  return out;
}

std::vector<std::pair<int, int>> edge_pairs(const Instance& inst) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : inst.edges()) out.emplace_back(e.u, e.v);
  return out;
}

lp::LinearProgram relaxation_model(const Instance& inst, const std::string& model) {
  if (model == "vs0") return build_vs0_model(inst, false).lp;
  if (model == "vs0_boxed") return build_vs0_model(inst, true).lp;
  if (model == "tree") {
    std::vector<double> diag(static_cast<std::size_t>(inst.m()));
    for (int e = 0; e < inst.m(); ++e) diag[e] = inst.q(e, e);
    return extended_mst_model(inst, diag);
  }
  throw InvalidArgument("unknown model '" + model + "' (vs0, vs0_boxed, tree)");
}

}  // namespace

PYBIND11_MODULE(_qmstp, m) {
  m.doc() = "Lower bounds, heuristics and an exact oracle for the quadratic minimum spanning tree problem";

  auto base = py::register_exception<Error>(m, "QmstpError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConnectivityError>(m, "ConnectivityError", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("edges"), py::arg("q"), py::arg("name") = "")
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("m", &Instance::m)
      .def_property_readonly("name", &Instance::name)
      .def_property_readonly("edges", &edge_pairs)
      .def_property_readonly("q", &cost_matrix)
      .def_property_readonly("is_complete", &Instance::is_complete)
      .def_property_readonly("density_percent", &Instance::density_percent)
      .def("edge_index", &Instance::edge_index)
      .def("to_text", &format_instance)
      .def("write", [](const Instance& inst, const std::filesystem::path& p) { write_instance(inst, p); })
      .def("__repr__", [](const Instance& inst) {
        return "<Instance " + inst.name() + " n=" + std::to_string(inst.n()) + " m=" + std::to_string(inst.m()) + ">";
      });

  m.def("read_instance", &read_instance, py::arg("path"));
  m.def("parse_instance", &parse_instance, py::arg("text"), py::arg("name") = "");
  m.def(
      "generate",
      [](const std::string& family, int n, int density, std::uint64_t seed, double vs_max_diag,
         double vs_max_offdiag) {
        return generate({parse_family(family), n, density, seed, vs_max_diag, vs_max_offdiag});
      },
      py::arg("family"), py::arg("n"), py::arg("density") = 100, py::arg("seed") = 1, py::arg("vs_max_diag") = 100.0,
      py::arg("vs_max_offdiag") = 100.0);

  py::class_<TracePoint>(m, "TracePoint")
      .def_readonly("iteration", &TracePoint::iteration)
      .def_readonly("bound", &TracePoint::bound)
      .def_readonly("cuts_added", &TracePoint::cuts_added)
      .def_readonly("elapsed", &TracePoint::elapsed);

  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("method", &BoundResult::method)
      .def_readonly("value", &BoundResult::value)
      .def_readonly("seconds", &BoundResult::seconds)
      .def_readonly("iterations", &BoundResult::iterations)
      .def_readonly("status", &BoundResult::status)
      .def_readonly("trace", &BoundResult::trace)
      .def_readonly("certificate", &BoundResult::certificate)
      .def_readonly("counters", &BoundResult::counters)
      .def_readonly("values", &BoundResult::values)
      .def_readonly("notes", &BoundResult::notes)
      .def("__repr__", [](const BoundResult& r) {
        return "<BoundResult " + r.method + " " + std::to_string(r.value) + " " + r.status + ">";
      });

  m.def("bound_methods", &bound_methods);
  m.def(
      "bound",
      [](const Instance& inst, const std::string& method, double time_limit, std::size_t cut_batch, double cut_tol,
         std::uint64_t seed) {
        BoundOptions opt;
        opt.time_limit = time_limit;
        opt.cut_batch = cut_batch;
        opt.cut_tol = cut_tol;
        opt.seed = seed;
        py::gil_scoped_release release;
        return compute_bound(inst, method, opt);
      },
      py::arg("instance"), py::arg("method") = "gl", py::arg("time_limit") = 7200.0, py::arg("cut_batch") = 0,
      py::arg("cut_tol") = 1e-6, py::arg("seed") = 1);

  py::class_<HeuristicResult>(m, "HeuristicResult")
      .def_readonly("cost", &HeuristicResult::cost)
      .def_readonly("iterations", &HeuristicResult::iterations)
      .def_property_readonly("edges", [](const HeuristicResult& r) { return r.tree.edges(); });

  m.def(
      "tabu_search",
      [](const Instance& inst, int iterations, int restarts, std::uint64_t seed) {
        py::gil_scoped_release release;
        return tabu_search(inst, {iterations, restarts, seed});
      },
      py::arg("instance"), py::arg("iterations") = 5000, py::arg("restarts") = 5, py::arg("seed") = 1);
  m.def(
      "upper_bound",
      [](const Instance& inst, std::uint64_t seed) {
        py::gil_scoped_release release;
        return upper_bound(inst, seed);
      },
      py::arg("instance"), py::arg("seed") = 1);
  m.def(
      "quadratic_cost", [](const Instance& inst, const std::vector<int>& edges) { return quadratic_cost(inst, edges); },
      py::arg("instance"), py::arg("edges"));

  py::class_<EnumerationReport>(m, "EnumerationReport")
      .def_readonly("tree_count", &EnumerationReport::tree_count)
      .def_readonly("optimum", &EnumerationReport::optimum)
      .def_readonly("best_tree", &EnumerationReport::best_tree);
  m.def(
      "exact",
      [](const Instance& inst, int limit_n) {
        py::gil_scoped_release release;
        return exact_qmstp(inst, limit_n);
      },
      py::arg("instance"), py::arg("limit_n") = 9);

  m.def(
      "verify",
      [](const Instance& inst, double time_limit, std::uint64_t seed) {
        VerifyOptions opt;
        opt.time_limit = time_limit;
        opt.seed = seed;
        std::vector<Check> checks;
        {
          py::gil_scoped_release release;
          checks = verify(inst, opt);
        }
        py::list out;
        for (const auto& c : checks) out.append(py::make_tuple(c.name, verdict_name(c.verdict), c.detail));
        return out;
      },
      py::arg("instance"), py::arg("time_limit") = 600.0, py::arg("seed") = 1,
      "List of (name, verdict, detail) with verdict PASS, FAIL or SKIP.");

  m.def(
      "benchmark_csv",
      [](const std::vector<Instance>& instances, const std::vector<std::string>& methods,
         std::optional<double> ub, int workers) {
        BenchmarkOptions opt;
        opt.methods = methods;
        opt.upper_bound = ub;
        opt.workers = workers;
        py::gil_scoped_release release;
        return benchmark_csv(run_benchmark(instances, opt));
      },
      py::arg("instances"), py::arg("methods") = std::vector<std::string>{"gl", "vs0"}, py::arg("ub") = py::none(),
      py::arg("workers") = 1);

  // LP files for cross-checking the relaxations with an external solver.
  py::class_<lp::LpSolution>(m, "LpSolution")
      .def_property_readonly("status", [](const lp::LpSolution& s) { return std::string(lp::status_name(s.status)); })
      .def_readonly("objective", &lp::LpSolution::objective)
      .def_readonly("primal", &lp::LpSolution::primal)
      .def_readonly("primal_residual", &lp::LpSolution::primal_residual)
      .def_readonly("duality_gap", &lp::LpSolution::duality_gap);

  py::class_<lp::LinearProgram>(m, "LinearProgram")
      .def_property_readonly("num_variables", &lp::LinearProgram::num_variables)
      .def_property_readonly("num_rows", &lp::LinearProgram::num_rows)
      .def_property_readonly("variable_names", &lp::variable_names)
      .def("to_lp", &lp::format_model)
      .def("solve", [](const lp::LinearProgram& lp) {
        py::gil_scoped_release release;
        return lp::solve(lp);
      })
      .def("format_solution", &lp::format_solution)
      .def("parse_solution", &lp::parse_solution)
      .def("objective_value", [](const lp::LinearProgram& lp, const std::vector<double>& x) {
        return lp.objective_value(x);
      });

  m.def("relaxation_model", &relaxation_model, py::arg("instance"), py::arg("model") = "vs0");
  m.def("parse_lp", &lp::parse_model, py::arg("text"));
}
