#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qmstp/error.hpp"
#include "qmstp/instance.hpp"

using namespace qmstp;

namespace {

void check_range(const Instance& inst, double dlo, double dhi, double olo, double ohi) {
  for (int e = 0; e < inst.m(); ++e)
    for (int f = 0; f < inst.m(); ++f) {
      const double v = inst.q(e, f);
      CHECK(v == std::round(v));
      if (e == f) {
        CHECK(v >= dlo);
        CHECK(v <= dhi);
      } else {
        CHECK(v >= olo);
        CHECK(v <= ohi);
      }
    }
}

}  // namespace

TEST_CASE("generator cost ranges per family") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (int d : {33, 67, 100}) {
      check_range(generate({Family::CP1, 10, d, seed}), 1, 10, 1, 10);
      check_range(generate({Family::CP2, 10, d, seed}), 1, 10, 1, 100);
      check_range(generate({Family::CP3, 10, d, seed}), 1, 100, 1, 10);
      check_range(generate({Family::CP4, 10, d, seed}), 1, 100, 1, 100);
    }
    check_range(generate({Family::OPsym, 8, 100, seed}), 1, 100, 1, 20);
  }
}

TEST_CASE("CP1 n=10 d=33 has ceil(0.33*45) edges") {
  const auto inst = generate({Family::CP1, 10, 33, 7});
  CHECK(inst.m() == 15);
  CHECK(inst.density_percent() == 33);
  CHECK(generate({Family::CP1, 10, 100, 7}).m() == 45);
}

TEST_CASE("OPvsym off-diagonal entries are products of vertex weights") {
  GenerationLog log;
  const auto inst = generate({Family::OPvsym, 6, 100, 11}, &log);
  REQUIRE(log.vertex_weights.size() == 6);
  const auto& w = log.vertex_weights;
  for (int x : w) CHECK((x >= 1 && x <= 10));
  for (int e = 0; e < inst.m(); ++e) {
    CHECK(inst.q(e, e) >= 1);
    CHECK(inst.q(e, e) <= 10000);
    for (int f = 0; f < inst.m(); ++f) {
      if (e == f) continue;
      const Edge a = inst.edge(e), b = inst.edge(f);
      CHECK(inst.q(e, f) == double(w[a.u] * w[a.v] * w[b.u] * w[b.v]));
    }
  }
}

TEST_CASE("OPesym costs are Euclidean lengths and midpoint distances") {
  GenerationLog log;
  const auto inst = generate({Family::OPesym, 4, 100, 5}, &log);
  const auto& c = log.coordinates;
  REQUIRE(c.size() == 4);
  for (int e = 0; e < inst.m(); ++e) {
    const Edge a = inst.edge(e);
    CHECK(inst.q(e, e) == doctest::Approx(std::hypot(c[a.u][0] - c[a.v][0], c[a.u][1] - c[a.v][1])).epsilon(1e-12));
    for (int f = 0; f < inst.m(); ++f) {
      if (e == f) continue;
      const Edge b = inst.edge(f);
      const double dx = 0.5 * (c[a.u][0] + c[a.v][0] - c[b.u][0] - c[b.v][0]);
      const double dy = 0.5 * (c[a.u][1] + c[a.v][1] - c[b.u][1] - c[b.v][1]);
      CHECK(std::abs(inst.q(e, f) - std::hypot(dx, dy)) <= 1e-9);
    }
  }
}

TEST_CASE("VS bands and symmetrisation") {
  GeneratorSpec spec{Family::VS, 10, 33, 3};
  spec.vs_max_diag = 100;
  spec.vs_max_offdiag = 100;
  GenerationLog log;
  const auto inst = generate(spec, &log);
  const int m = inst.m();
  CHECK(static_cast<int>(log.high_rows.size()) == (m + 9) / 10);
  std::vector<char> high(static_cast<std::size_t>(m), 0);
  for (int r : log.high_rows) high[r] = 1;
  for (int e = 0; e < m; ++e) {
    CHECK(inst.q(e, e) >= 0);
    CHECK(inst.q(e, e) <= 20);
    for (int f = e + 1; f < m; ++f) {
      const double v = inst.q(e, f);
      CHECK(2 * v == std::round(2 * v));
      double lo = 50, hi = 70;
      if (high[e] && high[f]) lo = 90, hi = 100;
      else if (high[e] || high[f]) lo = 35, hi = 55;  // average of a 20-40 and a 50-70 draw
      CHECK(v >= lo);
      CHECK(v <= hi);
    }
  }
}

TEST_CASE("generators are deterministic and symmetric") {
  for (Family f : {Family::CP1, Family::CP2, Family::CP3, Family::CP4, Family::OPsym, Family::OPvsym,
                   Family::OPesym, Family::VS}) {
    const int d = f == Family::OPsym || f == Family::OPvsym || f == Family::OPesym ? 100 : 67;
    const auto a = generate({f, 8, d, 42});
    const auto b = generate({f, 8, d, 42});
    CHECK(format_instance(a) == format_instance(b));
    for (int e = 0; e < a.m(); ++e)
      for (int g = 0; g < a.m(); ++g) CHECK(a.q(e, g) == a.q(g, e));
    CHECK(is_connected(a.n(), a.edges()));
  }
  CHECK(format_instance(generate({Family::CP1, 8, 67, 1})) != format_instance(generate({Family::CP1, 8, 67, 2})));
}

TEST_CASE("generator argument errors") {
  CHECK_THROWS_AS(generate({Family::CP1, 2, 100, 1}), InvalidArgument);
  CHECK_THROWS_AS(generate({Family::OPsym, 8, 67, 1}), InvalidArgument);
  CHECK_THROWS_AS(generate({Family::CP1, 10, 5, 1}), InvalidArgument);
  CHECK_THROWS_AS(parse_family("CP9"), InvalidArgument);
  CHECK(parse_family("opvsym") == Family::OPvsym);
}

TEST_CASE("instance file round trip is byte identical") {
  const auto inst = generate({Family::CP1, 10, 67, 9});
  const auto text = format_instance(inst);
  const auto path = std::filesystem::temp_directory_path() / "qmstp_roundtrip.txt";
  write_instance(inst, path);
  const auto back = read_instance(path);
  CHECK(format_instance(back) == text);
  CHECK(back.n() == inst.n());
  CHECK(back.edges() == inst.edges());
  for (int e = 0; e < inst.m(); ++e)
    for (int f = 0; f < inst.m(); ++f) CHECK(back.q(e, f) == inst.q(e, f));
  CHECK(back.name() == "qmstp_roundtrip");
  std::filesystem::remove(path);

  // Non-integer costs survive too.
  const auto vs = generate({Family::OPesym, 5, 100, 2});
  CHECK(format_instance(parse_instance(format_instance(vs))) == format_instance(vs));
}

TEST_CASE("instance file errors") {
  SUBCASE("asymmetric Q names the entry") {
    const std::string text = "QMSTP 1\n3 3\n0 1\n0 2\n1 2\n1 2 3\n2 1 4\n3 5 1\n";
    try {
      parse_instance(text);
      FAIL("expected an error");
    } catch (const InvalidArgument& e) {
      const std::string msg = e.what();
      CHECK(msg.find("row 1, col 2") != std::string::npos);
    }
  }
  SUBCASE("too few edges to connect") {
    const std::string text = "QMSTP 1\n4 2\n0 1\n2 3\n1 0\n0 1\n";
    CHECK_THROWS_AS(parse_instance(text), ConnectivityError);
  }
  SUBCASE("bad header") { CHECK_THROWS_AS(parse_instance("QMSTP 2\n3 3\n"), ParseError); }
  SUBCASE("truncated matrix") {
    CHECK_THROWS_AS(parse_instance("QMSTP 1\n3 2\n0 1\n1 2\n1 1\n"), ParseError);
  }
  SUBCASE("unsorted edges") {
    CHECK_THROWS_AS(parse_instance("QMSTP 1\n3 2\n1 2\n0 1\n1 0\n0 1\n"), InvalidArgument);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(read_instance("/nonexistent/qmstp.txt"), ParseError); }
}

TEST_CASE("edge_sets") {
  const Instance k4 = Instance::with_linear_costs(4, complete_graph_edges(4), std::vector<double>{1, 2, 3, 4, 5, 6});
  const std::vector<int> all = {0, 1, 2, 3};
  auto s = edge_sets(k4, all);
  CHECK(s.inside.size() == 6);
  CHECK(s.boundary.empty());
  const std::vector<int> one = {2};
  s = edge_sets(k4, one);
  CHECK(s.inside.empty());
  CHECK(s.boundary == k4.incident(2));
  const std::vector<int> pair = {0, 1};
  s = edge_sets(k4, pair);
  CHECK(s.inside.size() == 1);
  CHECK(s.boundary.size() == 4);
}
