#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "frustration/ilp_model.hpp"

namespace frustration {

/// Writes `model` in the CPLEX LP text format. The objective constant cannot
/// be expressed in that format, so it is recorded in a `\ Objective constant:`
/// comment and must be added to any externally computed optimum. Pool cuts go
/// to a `Lazy Constraints` section. The output depends only on the model.
void write_lp(const IlpModel& model, std::ostream& out);

/// `name priority` per variable with nonzero priority, in variable order.
void write_priorities(const IlpModel& model, std::ostream& out);

/// Writes `path` and, when any variable has a priority, `path.priorities`.
/// Throws std::runtime_error on I/O failure.
void export_lp(const IlpModel& model, const std::filesystem::path& path);

/// Reads the subset of the LP format produced by write_lp (plus `free`,
/// `Generals`, `>=`/`=<`/`=>` variants and multi-line expressions). Restores
/// the objective constant, model kind and node variables from our comments
/// when present, and priorities from a `.priorities` sidecar if one exists.
/// Throws std::runtime_error with a line number on malformed input.
IlpModel read_lp(std::istream& in, const std::string& name = "<stream>");
IlpModel read_lp(const std::filesystem::path& path);

/// Objective constant recorded in an exported LP file (0 when absent).
double read_objective_constant(const std::filesystem::path& path);

}  // namespace frustration
