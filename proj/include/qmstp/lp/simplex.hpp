#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qmstp/lp/linear_program.hpp"

namespace qmstp::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit, TimeLimit };

std::string_view status_name(Status s);

struct Limits {
  long max_iterations = 50'000'000;
  double time_limit = kInf;  ///< seconds
};

/// Tolerances used to certify a solution. Defaults are feas 1e-7 and opt 1e-6;
/// QMSTP_FEAS_TOL / QMSTP_OPT_TOL override them.
struct Tolerances {
  double feas = 1e-7;
  double opt = 1e-6;
};

Tolerances default_tolerances();

struct LpSolution {
  Status status = Status::IterationLimit;
  double objective = 0.0;             ///< in the model's sense, offset included
  std::vector<double> primal;         ///< one value per variable
  std::vector<double> dual;           ///< per row: d(objective)/d(rhs)
  std::vector<double> reduced_costs;  ///< per variable, in the model's sense
  long iterations = 0;
  double seconds = 0.0;
  double primal_residual = 0.0;  ///< worst row or bound violation
  double dual_residual = 0.0;    ///< worst reduced-cost sign violation
  double duality_gap = 0.0;      ///< |primal objective - dual objective|

  bool optimal() const { return status == Status::Optimal; }
  /// Feasibility and strong-duality checks at the given tolerances.
  bool certified(const Tolerances& tol = default_tolerances()) const;
};

/// Bounded revised simplex with a sparse LU basis factorisation and
/// product-form updates. Primal simplex (composite phase 1) for cold starts,
/// dual simplex after rows are appended to a solved model.
class Simplex {
 public:
  explicit Simplex(LinearProgram lp, Limits limits = {});
  ~Simplex();
  Simplex(Simplex&&) noexcept;
  Simplex& operator=(Simplex&&) noexcept;

  LpSolution solve();

  /// Appends a row. The next solve() starts from the current basis with the
  /// new row's slack basic.
  int add_row(std::string name, std::vector<Term> terms, RowSense sense, double rhs);

  void set_limits(Limits limits);
  const LinearProgram& model() const;

 private:
  struct Engine;
  std::unique_ptr<Engine> engine_;
};

LpSolution solve(const LinearProgram& lp, Limits limits = {});

/// Process-wide record of every optimal solve's certificate quality.
struct CertificateAudit {
  long optimal_solves = 0;
  double worst_primal_residual = 0.0;
  double worst_dual_residual = 0.0;
  double worst_relative_gap = 0.0;  ///< gap / (1 + |objective|)
};

CertificateAudit certificate_audit();
void reset_certificate_audit();

}  // namespace qmstp::lp
