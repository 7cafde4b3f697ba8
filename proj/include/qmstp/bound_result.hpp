#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace qmstp {

struct TracePoint {
  int iteration = 0;
  double bound = 0.0;
  long cuts_added = 0;  ///< rows added after this solve (cutting-plane and row-generation methods)
  double elapsed = 0.0;
};

/// Result of one lower-bound computation. `status` is "optimal" when the method
/// ran to its own stopping rule; the value is a valid lower bound regardless.
struct BoundResult {
  std::string method;
  double value = -std::numeric_limits<double>::infinity();
  double seconds = 0.0;
  long iterations = 0;
  std::string status = "optimal";
  std::vector<TracePoint> trace;
  std::vector<double> certificate;  ///< gamma, lambda or LP duals depending on the method
  std::map<std::string, long> counters;
  std::map<std::string, double> values;
  std::vector<std::string> notes;
};

}  // namespace qmstp
