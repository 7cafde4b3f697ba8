#include <doctest.h>

#include <numeric>

#include "explicit_models.hpp"
#include "qmstp/error.hpp"
#include "qmstp/mst.hpp"
#include "qmstp/oracle.hpp"
#include "qmstp/rng.hpp"

using namespace qmstp;

namespace {

Instance path4() { return Instance::with_linear_costs(4, {{0, 1}, {1, 2}, {2, 3}}, std::vector<double>{1, 1, 1}); }

Instance k4() {
  return Instance::with_linear_costs(4, complete_graph_edges(4), std::vector<double>{1, 2, 3, 4, 5, 6});
}

double brute_force_mst(const Instance& inst, const std::vector<double>& p, int forced = -1) {
  double best = 1e300;
  for_each_spanning_tree(inst, [&](std::span<const int> t, double) {
    if (forced >= 0 && std::find(t.begin(), t.end(), forced) == t.end()) return;
    double c = 0;
    for (int e : t) c += p[e];
    best = std::min(best, c);
  });
  return best;
}

}  // namespace

TEST_CASE("mst on small graphs") {
  const auto p4 = path4();
  const std::vector<double> ones = {1, 1, 1};
  auto t = mst(p4, ones);
  CHECK(t.edges() == std::vector<int>{0, 1, 2});
  CHECK(t.linear_cost(ones) == 3);

  const auto k = k4();
  const std::vector<double> p = {1, 2, 3, 4, 5, 6};
  CHECK(mst(k, p).linear_cost(p) == 6);
  CHECK(mst_with_forced_edge(k, p, 5).linear_cost(p) == 9);
  CHECK(mst_with_forced_edge(p4, ones, 1).edges() == std::vector<int>{0, 1, 2});

  const std::vector<double> zero(6, 0.0);
  CHECK(mst(k, zero).edges() == std::vector<int>{0, 1, 2});
}

TEST_CASE("forcing a bridge does not change the optimum") {
  // Triangle 0-1-2 with pendant vertex 3 on the bridge (2,3).
  const auto inst =
      Instance::with_linear_costs(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, std::vector<double>{3, 1, 2, 5});
  const std::vector<double> p = {3, 1, 2, 5};
  CHECK(mst_with_forced_edge(inst, p, 3).linear_cost(p) == mst(inst, p).linear_cost(p));
}

TEST_CASE("spanning tree validation") {
  const auto k = k4();
  CHECK_THROWS_AS(SpanningTree::from_edges(k, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(SpanningTree::from_edges(k, {0, 1, 3}), InvalidArgument);  // 0-1, 0-2, 1-2 is a cycle
  CHECK_THROWS_AS(SpanningTree::from_edges(k, {0, 1, 9}), InvalidArgument);
  const auto t = SpanningTree::from_edges(k, {2, 0, 5});
  CHECK(t.edges() == std::vector<int>{0, 2, 5});
}

TEST_CASE("mst properties on random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const auto inst = testing::random_instance(n, seed % 2 ? 67 : 100, seed);
    Rng rng(seed);
    std::vector<double> p(static_cast<std::size_t>(inst.m()));
    for (double& x : p) x = static_cast<double>(rng.uniform_int(-20, 20));
    const auto t = mst(inst, p);
    CHECK(t.linear_cost(p) == doctest::Approx(brute_force_mst(inst, p)));

    // Shift invariance.
    auto shifted = p;
    for (double& x : shifted) x += 7.5;
    const auto ts = mst(inst, shifted);
    CHECK(ts == t);
    CHECK(ts.linear_cost(shifted) == doctest::Approx(t.linear_cost(p) + 7.5 * (n - 1)));

    for (int e = 0; e < inst.m(); ++e) {
      const auto f = mst_with_forced_edge(inst, p, e);
      CHECK(f.contains(e));
      CHECK(f.linear_cost(p) >= t.linear_cost(p));
      if (e % 3 == 0) CHECK(f.linear_cost(p) == doctest::Approx(brute_force_mst(inst, p, e)));
    }
  }
}

TEST_CASE("separation_value") {
  const auto tri = Instance::with_linear_costs(3, complete_graph_edges(3), std::vector<double>{1, 1, 1});
  const std::vector<double> ones = {1, 1, 1};
  for (int k = 0; k < 3; ++k) {
    const auto r = separation_value(tri, k, ones);
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.violated_set == std::vector<int>{0, 1, 2});
  }
  const std::vector<double> zero = {0, 0, 0};
  CHECK(separation_value(tri, 0, zero).value == 0.0);
  CHECK(separation_value(tri, 0, zero).violated_set.empty());
  CHECK_THROWS_AS(separation_value(tri, 0, std::vector<double>{1, -1, 0}), InvalidArgument);

  // A tree satisfies every subtour constraint.
  const auto inst = testing::random_instance(7, 67, 3);
  std::vector<double> p(static_cast<std::size_t>(inst.m()));
  std::iota(p.begin(), p.end(), 0.0);
  const auto t = mst(inst, p);
  std::vector<double> x(t.incidence().begin(), t.incidence().end());
  for (int k = 0; k < inst.n(); ++k) CHECK(separation_value(inst, k, x).value == 0.0);
}

TEST_CASE("separation_value matches subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto inst = testing::random_instance(6, 67, seed);
    Rng rng(seed * 31);
    std::vector<double> x(static_cast<std::size_t>(inst.m()));
    for (double& v : x) v = rng.uniform01() * 1.2;
    for (int k = 0; k < inst.n(); ++k) {
      const auto r = separation_value(inst, k, x);
      const double expect = testing::brute_force_separation(inst, k, x);
      CHECK(r.value == doctest::Approx(expect).epsilon(1e-7));
      if (r.value > 1e-7) {
        REQUIRE(!r.violated_set.empty());
        CHECK(std::find(r.violated_set.begin(), r.violated_set.end(), k) != r.violated_set.end());
        double lhs = 0;
        for (int e : edge_sets(inst, r.violated_set).inside) lhs += x[e];
        CHECK(lhs - (r.violated_set.size() - 1.0) == doctest::Approx(r.value).epsilon(1e-7));
      }
    }
  }
}
