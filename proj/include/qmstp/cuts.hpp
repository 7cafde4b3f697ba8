#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <vector>

#include "qmstp/bound_result.hpp"
#include "qmstp/extended.hpp"
#include "qmstp/instance.hpp"
#include "qmstp/lp/linear_program.hpp"

namespace qmstp {

/// Boolean quadric inequalities on (x, y):
///   UB   y_ef <= x_e                          (ordered pair; g unused)
///   Lift x_e + x_f <= 1 + y_ef
///   Tri1 y_eg + y_fg <= x_g + y_ef
///   Tri2 x_e + x_f + x_g <= y_ef + y_eg + y_fg + 1
enum class CutKind { UB = 0, Lift = 1, Tri1 = 2, Tri2 = 3 };

const char* cut_kind_name(CutKind k);

struct Cut {
  CutKind kind = CutKind::UB;
  int e = -1;
  int f = -1;
  int g = -1;
  double violation = 0.0;
};

/// Canonical form: Lift and Tri2 indices sorted, Tri1 with e < f.
Cut canonical(Cut c);
using CutKey = std::array<int, 4>;
CutKey cut_key(const Cut& c);

/// lhs - rhs at the point; positive means violated.
double cut_violation(const Cut& c, const RelaxationPoint& pt);
/// Same, for an integral point given by a tree incidence vector (y = x x^T).
double cut_violation(const Cut& c, const std::vector<char>& incidence);

/// Row of the cut in a QuadraticModel, as terms <= rhs.
std::vector<lp::Term> cut_terms(const Cut& c, const QuadraticModel& model, double& rhs);

class CutPool {
 public:
  bool contains(const Cut& c) const { return keys_.count(cut_key(c)) != 0; }
  /// Returns false (and counts a rejected duplicate) if the cut is present.
  bool add(const Cut& c);
  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  long count(CutKind k) const { return counts_[static_cast<int>(k)]; }
  long rejected_duplicates() const { return rejected_; }

 private:
  std::vector<Cut> cuts_;
  std::set<CutKey> keys_;
  std::array<long, 4> counts_{};
  long rejected_ = 0;
};

enum class CutLevel { VS1, VS2 };

/// Up to `batch` violated cuts (violation > cut_tol), most violated first,
/// ties by (kind, e, f, g). VS1 scans UB and Lift; VS2 scans Tri1 and Tri2.
/// Cuts already in `pool` are skipped.
std::vector<Cut> separate(const RelaxationPoint& pt, CutLevel level, std::size_t batch, double cut_tol,
                          const CutPool* pool = nullptr);

struct CuttingPlaneOptions {
  double time_limit = 7200.0;
  std::size_t batch = 0;  ///< 0 means n * m
  double cut_tol = 1e-6;
  int max_rounds = 1000000;
};

/// VS1: VS0 plus UB/Lift rows until none is violated. VS2: continues from the
/// converged VS1 model with Tri1/Tri2 batches. Every trace entry is a valid
/// lower bound. For VS2, values["vs1"] holds the VS1 bound reached on the way.
BoundResult vs_bound(const Instance& inst, CutLevel level, const CuttingPlaneOptions& opt = {},
                     CutPool* pool_out = nullptr);

}  // namespace qmstp
