#include <doctest.h>

#include <cmath>

#include "explicit_models.hpp"
#include "fixtures.hpp"
#include "qmstp/error.hpp"
#include "qmstp/extended.hpp"
#include "qmstp/gl_bounds.hpp"
#include "qmstp/cuts.hpp"
#include "qmstp/heuristics.hpp"
#include "qmstp/oracle.hpp"
#include "qmstp/rng.hpp"

using namespace qmstp;

TEST_CASE("Cayley counts on complete graphs") {
  for (int n = 2; n <= 7; ++n) {
    const auto edges = complete_graph_edges(n);
    const auto inst = Instance::with_linear_costs(n, edges, std::vector<double>(edges.size(), 1.0));
    CHECK(exact_qmstp(inst).tree_count == static_cast<long long>(std::pow(n, n - 2) + 0.5));
  }
}

TEST_CASE("reference optima") {
  const auto r = exact_qmstp(testing::k5_fixture(), 9, true);
  CHECK(r.tree_count == 125);
  CHECK(r.optimum == testing::k5_reference.optimum);
  CHECK(r.costs.size() == 125);
  CHECK(*std::min_element(r.costs.begin(), r.costs.end()) == r.optimum);
  CHECK(quadratic_cost(testing::k5_fixture(), r.best_tree) == r.optimum);
  CHECK(exact_qmstp(testing::s6_fixture()).optimum == testing::s6_reference.optimum);
}

TEST_CASE("diagonal matrix optimum is the MST") {
  const auto base = testing::random_instance(7, 67, 2);
  std::vector<double> p(static_cast<std::size_t>(base.m()));
  Rng rng(2);
  for (double& x : p) x = static_cast<double>(rng.uniform_int(1, 30));
  const auto inst = Instance::with_linear_costs(base.n(), base.edges(), p);
  CHECK(exact_qmstp(inst).optimum == mst(inst, p).linear_cost(p));
}

TEST_CASE("optimum is the exact cost of the reported tree") {
  // Fractional entries: the running enumeration sum drifts in the last bits.
  const auto inst = generate({Family::OPesym, 8, 100, 207});
  const auto r = exact_qmstp(inst);
  CHECK(quadratic_cost(inst, r.best_tree) == r.optimum);
  CHECK(upper_bound(inst, 1).cost >= r.optimum);
  std::vector<int> reversed(r.best_tree.rbegin(), r.best_tree.rend());
  CHECK(quadratic_cost(inst, reversed) == r.optimum);
}

TEST_CASE("limit on n") {
  const auto inst = generate({Family::CP1, 10, 33, 1});
  CHECK_THROWS_AS(exact_qmstp(inst), InvalidArgument);
  CHECK_NOTHROW(exact_qmstp(inst, 10));
}

TEST_CASE("K6 optimum dominates every bound") {
  const auto inst = generate({Family::CP1, 6, 100, 17});
  const double opt = exact_qmstp(inst).optimum;
  CHECK(gl_bound(inst).value <= opt + 1e-9);
  CHECK(assad_xu(inst).value <= opt + 1e-9);
  CHECK(oncan_punnen(inst).value <= opt + 1e-9);
  CHECK(vs0_bound(inst).value <= opt + 1e-6);
  CHECK(lbb_bound(inst).value <= opt + 1e-6);
  CHECK(vs_bound(inst, CutLevel::VS1).value <= opt + 1e-6);
  CHECK(vs_bound(inst, CutLevel::VS2).value <= opt + 1e-6);
  CHECK(rlt1_incomplete_bound(inst).value <= opt + 1e-6);
  CHECK(upper_bound(inst).cost >= opt - 1e-9);
}

TEST_CASE("weak sum decomposition round trip") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const auto edges = seed % 2 ? complete_graph_edges(n) : testing::random_instance(n, 67, seed).edges();
    Rng rng(seed);
    std::vector<double> a(edges.size()), diag(edges.size());
    for (auto& x : a) x = rng.uniform_real(-3, 9);
    for (auto& x : diag) x = static_cast<double>(rng.uniform_int(1, 20));
    const auto inst = weak_sum_instance(n, edges, a, diag);
    const auto got = weak_sum_decompose(inst);
    REQUIRE(got.has_value());
    const int m = inst.m();
    for (int e = 0; e < m; ++e)
      for (int f = 0; f < m; ++f)
        if (e != f) CHECK(std::abs((*got)[e] + (*got)[f] - inst.q(e, f)) <= 1e-9);
    // On complete graphs every tree costs p(T), so the optimum is MST(p).
    if (inst.is_complete()) {
      const auto p = linearization_vector(inst, *got);
      CHECK(exact_qmstp(inst).optimum == doctest::Approx(mst(inst, p).linear_cost(p)).epsilon(1e-12));
      for_each_spanning_tree(inst, [&](std::span<const int> t, double cost) {
        double lin = 0;
        for (int e : t) lin += p[e];
        CHECK(cost == doctest::Approx(lin).epsilon(1e-12));
      });
    }

    // A single perturbed entry breaks the decomposition.
    std::vector<double> q(inst.matrix().begin(), inst.matrix().end());
    q[0 * m + 1] += 0.5;
    q[1 * m + 0] += 0.5;
    CHECK_FALSE(weak_sum_decompose(inst.with_costs(q)).has_value());
  }
}
