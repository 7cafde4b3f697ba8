#pragma once

#include <cstdint>

#include "qmstp/instance.hpp"
#include "qmstp/mst.hpp"

namespace qmstp {

struct HeuristicResult {
  SpanningTree tree;
  double cost = 0.0;
  long iterations = 0;
};

struct TabuOptions {
  int iterations = 5000;  ///< total over all restarts
  int restarts = 5;       ///< runs; the first starts from the MST of the diagonal
  std::uint64_t seed = 1;
};

/// Tabu search over edge exchanges. Tenure ceil(sqrt(m)) applies to the edge
/// removed (cannot re-enter) and the edge added (cannot leave); a tabu move is
/// allowed when it improves on the incumbent.
HeuristicResult tabu_search(const Instance& inst, const TabuOptions& opt = {});

struct VnsOptions {
  int k_max = 3;
  int passes = 5;  ///< full k = 1..k_max cycles without improvement before stopping
  std::uint64_t seed = 1;
};

/// Shake with k random exchanges, then best-improvement descent. Never returns
/// a tree worse than `start`.
HeuristicResult vns_polish(const Instance& inst, const SpanningTree& start, const VnsOptions& opt = {});

/// Best of tabu search followed by a VNS polish.
HeuristicResult upper_bound(const Instance& inst, std::uint64_t seed = 1);

}  // namespace qmstp
