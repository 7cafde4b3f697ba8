#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace qmstp::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ObjectiveSense { Minimize, Maximize };
enum class RowSense { LessEqual, Equal, GreaterEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInf;
  double cost = 0.0;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

/// A linear program in row form. Variables and rows are referenced by the
/// index returned when they are added.
class LinearProgram {
 public:
  explicit LinearProgram(ObjectiveSense sense = ObjectiveSense::Minimize) : sense_(sense) {}

  int add_variable(std::string name, double lower, double upper, double cost);
  /// Terms naming the same variable twice are merged.
  int add_row(std::string name, std::vector<Term> terms, RowSense sense, double rhs);

  void set_cost(int var, double cost) { vars_.at(static_cast<std::size_t>(var)).cost = cost; }
  void set_bounds(int var, double lower, double upper);
  void set_objective_offset(double offset) { offset_ = offset; }

  ObjectiveSense sense() const { return sense_; }
  double objective_offset() const { return offset_; }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Variable& variable(int j) const { return vars_[static_cast<std::size_t>(j)]; }
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Throws InvalidArgument on NaN data, lower > upper, or bad indices.
  void validate() const;

  double objective_value(std::span<const double> x) const;
  double row_activity(int i, std::span<const double> x) const;
  /// Largest bound or row violation of a point (0 when feasible).
  double max_violation(std::span<const double> x) const;

 private:
  ObjectiveSense sense_;
  double offset_ = 0.0;
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
};

}  // namespace qmstp::lp
