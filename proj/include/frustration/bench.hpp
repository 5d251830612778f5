#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "frustration/generators.hpp"
#include "frustration/io.hpp"
#include "frustration/solver.hpp"

namespace frustration {

/// Random instances to sweep: every (nodes, edges) size crossed with every
/// negative-edge fraction, `repetitions` graphs each.
struct SweepGrid {
  GraphModel generator = GraphModel::BarabasiAlbert;
  std::vector<std::pair<int, long>> sizes;
  std::vector<double> negative_fractions;
  /// Repetition r uses seed base_seed + r in every cell.
  std::uint64_t base_seed = 1;
};

struct SweepOptions {
  std::vector<ModelKind> models{ModelKind::Xor};
  SolverOptions solver;
  int repetitions = 10;
  /// Cells are spread over this many threads; instances within a cell run
  /// one after another.
  int workers = 1;
};

struct SweepInstance {
  ReportRow row;
  std::uint64_t seed = 0;
  double negative_fraction = 0.0;
  /// Stopped by a time or node limit before proving optimality.
  bool limit_hit = false;
};

struct CellSummary {
  std::string model;
  int nodes = 0;
  long edges = 0;
  double negative_fraction = 0.0;
  int instances = 0;
  double mean_seconds = 0.0;
  double sd_seconds = 0.0;  // sample SD; 0 for a single instance
  double mean_optimum = 0.0;
  int limit_hits = 0;
};

struct SweepResult {
  std::vector<SweepInstance> instances;  // cell-major, then repetition
  std::vector<CellSummary> cells;
};

/// Throws std::invalid_argument for an invalid grid (before solving anything).
SweepResult run_sweep(const SweepGrid& grid, const SweepOptions& options);

/// Per-cell summary built from instance rows (exposed for testing).
CellSummary summarise_cell(const std::vector<SweepInstance>& instances);

inline constexpr const char* kSweepHeader =
    "model,n,m,neg_frac,instances,mean_seconds,sd_seconds,mean_optimum,limit_hits";

void write_sweep_csv(const std::vector<CellSummary>& cells, std::ostream& out);
void write_sweep_csv(const std::vector<CellSummary>& cells, const std::filesystem::path& path);

/// Instance rows in the shared report schema.
std::vector<ReportRow> report_rows(const SweepResult& result);

}  // namespace frustration
