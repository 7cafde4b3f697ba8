#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qmstp/lp/linear_program.hpp"
#include "qmstp/lp/simplex.hpp"

namespace qmstp::lp {

/// Text LP model in the CPLEX-style section format (grammar in
/// docs/lp_format.md). Names that are not valid LP identifiers, or repeat,
/// are replaced by generated ones (x<j> for every variable, c<i> for every row).
std::string format_model(const LinearProgram& lp);
void write_model(const LinearProgram& lp, const std::filesystem::path& path);

/// Parses the subset written by format_model. Throws ParseError.
LinearProgram parse_model(std::string_view text);
LinearProgram read_model(const std::filesystem::path& path);

/// Solution file: `STATUS <name>`, optional `OBJECTIVE <value>`, then one
/// `<variable> <value>` line per variable.
std::string format_solution(const LinearProgram& lp, const LpSolution& sol);
void write_solution(const LinearProgram& lp, const LpSolution& sol, const std::filesystem::path& path);

/// Reads a solution for `lp` (matched by the names format_model writes).
/// Fills status, primal, objective (recomputed from the primal) and
/// primal_residual; duals are not part of the file.
LpSolution parse_solution(const LinearProgram& lp, std::string_view text);
LpSolution read_solution(const LinearProgram& lp, const std::filesystem::path& path);

/// Names format_model uses for the variables and rows of `lp`.
std::vector<std::string> variable_names(const LinearProgram& lp);
std::vector<std::string> row_names(const LinearProgram& lp);

}  // namespace qmstp::lp
