#include "qmstp/lp/linear_program.hpp"

#include <algorithm>
#include <cmath>

#include "qmstp/error.hpp"

namespace qmstp::lp {

int LinearProgram::add_variable(std::string name, double lower, double upper, double cost) {
  vars_.push_back({std::move(name), lower, upper, cost});
  return static_cast<int>(vars_.size()) - 1;
}

int LinearProgram::add_row(std::string name, std::vector<Term> terms, RowSense sense, double rhs) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) merged.back().coef += t.coef;
    else merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  rows_.push_back({std::move(name), std::move(merged), sense, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

void LinearProgram::set_bounds(int var, double lower, double upper) {
  auto& v = vars_.at(static_cast<std::size_t>(var));
  v.lower = lower;
  v.upper = upper;
}

void LinearProgram::validate() const {
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const auto& v = vars_[j];
    if (std::isnan(v.lower) || std::isnan(v.upper) || !std::isfinite(v.cost))
      throw InvalidArgument("variable '" + v.name + "' has NaN bound or non-finite cost");
    if (v.lower > v.upper) throw InvalidArgument("variable '" + v.name + "' has lower > upper");
    if (v.lower == kInf || v.upper == -kInf)
      throw InvalidArgument("variable '" + v.name + "' has an infinite bound on the wrong side");
  }
  for (const auto& r : rows_) {
    if (!std::isfinite(r.rhs)) throw InvalidArgument("row '" + r.name + "' has non-finite rhs");
    for (const auto& t : r.terms) {
      if (t.var < 0 || t.var >= num_variables())
        throw InvalidArgument("row '" + r.name + "' references variable " + std::to_string(t.var));
      if (!std::isfinite(t.coef)) throw InvalidArgument("row '" + r.name + "' has a non-finite coefficient");
    }
  }
}

double LinearProgram::objective_value(std::span<const double> x) const {
  double s = offset_;
  for (std::size_t j = 0; j < vars_.size(); ++j) s += vars_[j].cost * x[j];
  return s;
}

double LinearProgram::row_activity(int i, std::span<const double> x) const {
  double s = 0.0;
  for (const auto& t : rows_[static_cast<std::size_t>(i)].terms) s += t.coef * x[static_cast<std::size_t>(t.var)];
  return s;
}

double LinearProgram::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    worst = std::max({worst, vars_[j].lower - x[j], x[j] - vars_[j].upper});
  }
  for (int i = 0; i < num_rows(); ++i) {
    const double a = row_activity(i, x);
    const auto& r = rows_[static_cast<std::size_t>(i)];
    switch (r.sense) {
      case RowSense::LessEqual: worst = std::max(worst, a - r.rhs); break;
      case RowSense::GreaterEqual: worst = std::max(worst, r.rhs - a); break;
      case RowSense::Equal: worst = std::max(worst, std::abs(a - r.rhs)); break;
    }
  }
  return worst;
}

}  // namespace qmstp::lp
