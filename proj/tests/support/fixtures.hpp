#pragma once

#include <vector>

#include "qmstp/instance.hpp"

namespace qmstp::testing {

// Two hand-built instances with reference values computed outside this
// library: enumeration of all spanning trees for the optimum and the GL
// bound, and HiGHS on explicit models (subtour form, every cut and subset
// written out) for the LP relaxations.
struct Reference {
  double optimum, gl, vs0, vs1, vs2, rlt1;
};

inline Instance k5_fixture() {
  std::vector<double> q = {
      1, 8, 5, 2, 9, 6, 3, 10, 7, 4,   8, 8, 8, 8, 8, 8, 8, 8, 8, 8,  5, 8, 1, 4, 7, 10, 3, 6, 9, 2,
      2, 8, 4, 10, 6, 2, 8, 4, 10, 6,  9, 8, 7, 6, 5, 4, 3, 2, 1, 10, 6, 8, 10, 2, 4, 6, 8, 10, 2, 4,
      3, 8, 3, 8, 3, 8, 3, 8, 3, 8,    10, 8, 6, 4, 2, 10, 8, 6, 4, 2, 7, 8, 9, 10, 1, 2, 3, 4, 5, 6,
      4, 8, 2, 6, 10, 4, 8, 2, 6, 10};
  return Instance(5, complete_graph_edges(5), std::move(q), "k5_fixture");
}
inline constexpr Reference k5_reference{70.0, 52.0, 39.0, 52.0, 63.0, 62.0};

inline Instance s6_fixture() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
                             {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}};
  std::vector<double> q = {
      4, 6, 2, 7, 3, 8, 4, 9, 5, 1, 6,  6, 8, 9, 6, 3, 9, 6, 3, 9, 6, 3,  2, 9, 2, 5, 3, 1, 8, 6, 4, 2, 9,
      7, 6, 5, 6, 3, 2, 1, 9, 8, 7, 6,  3, 3, 3, 3, 10, 3, 3, 3, 3, 3, 3, 8, 9, 1, 2, 3, 4, 5, 6, 7, 8, 9,
      4, 6, 8, 1, 3, 5, 8, 9, 2, 4, 6,  9, 3, 6, 9, 3, 6, 9, 2, 6, 9, 3,  5, 9, 4, 8, 3, 7, 2, 6, 6, 5, 9,
      1, 6, 2, 7, 3, 8, 4, 9, 5, 10, 6, 6, 3, 9, 6, 3, 9, 6, 3, 9, 6, 4};
  return Instance(6, std::move(edges), std::move(q), "s6_fixture");
}
inline constexpr Reference s6_reference{100.0, 78.0, 47.0, 91.0, 96.0, 93.972602739726};

}  // namespace qmstp::testing
