#include "frustration/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace frustration {

namespace {

struct CellKey {
  ModelKind model;
  int nodes;
  long edges;
  double negative_fraction;
};

std::string instance_name(const SweepGrid& grid, const CellKey& cell, std::uint64_t seed) {
  std::ostringstream name;
  name << to_string(grid.generator) << "_n" << cell.nodes << "_m" << cell.edges << "_neg"
       << format_number(cell.negative_fraction) << "_s" << seed;
  return name.str();
}

std::vector<SweepInstance> run_cell(const SweepGrid& grid, const SweepOptions& options,
                                    const CellKey& cell) {
  std::vector<SweepInstance> out;
  for (int r = 0; r < options.repetitions; ++r) {
    GenSpec spec;
    spec.model = grid.generator;
    spec.nodes = cell.nodes;
    spec.edges = cell.edges;
    spec.negative_fraction = cell.negative_fraction;
    spec.seed = grid.base_seed + static_cast<std::uint64_t>(r);
    const SignedGraph g = generate(spec);

    SolverOptions solver = options.solver;
    solver.model = cell.model;
    if (cell.model == ModelKind::Weighted || cell.model == ModelKind::Multicolour) {
      solver.cuts = CutMode::Off;
    }
    const SolveReport report = compute_frustration(g, solver);

    SweepInstance inst;
    inst.seed = spec.seed;
    inst.negative_fraction = cell.negative_fraction;
    inst.limit_hit = report.status != SolveStatus::Optimal;
    inst.row.instance = instance_name(grid, cell, spec.seed);
    inst.row.model = to_string(cell.model);
    inst.row.nodes = g.num_nodes();
    inst.row.edges = g.num_edges();
    inst.row.negative_edges = g.num_negative();
    inst.row.optimum = report.optimum;
    inst.row.root_objective = report.root_objective;
    inst.row.bnb_nodes = report.nodes;
    inst.row.branching_factor = report.branching_factor;
    inst.row.seconds = report.seconds;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

CellSummary summarise_cell(const std::vector<SweepInstance>& instances) {
  CellSummary s;
  s.instances = static_cast<int>(instances.size());
  if (instances.empty()) return s;
  const ReportRow& first = instances.front().row;
  s.model = first.model;
  s.nodes = first.nodes;
  s.edges = first.edges;
  s.negative_fraction = instances.front().negative_fraction;
  for (const SweepInstance& i : instances) {
    s.mean_seconds += i.row.seconds;
    s.mean_optimum += i.row.optimum;
    s.limit_hits += i.limit_hit;
  }
  s.mean_seconds /= s.instances;
  s.mean_optimum /= s.instances;
  if (s.instances > 1) {
    double ss = 0.0;
    for (const SweepInstance& i : instances) ss += (i.row.seconds - s.mean_seconds) * (i.row.seconds - s.mean_seconds);
    s.sd_seconds = std::sqrt(ss / (s.instances - 1));
  }
  return s;
}

SweepResult run_sweep(const SweepGrid& grid, const SweepOptions& options) {
  if (options.repetitions < 0) throw std::invalid_argument("repetitions must be non-negative");
  if (options.workers < 1) throw std::invalid_argument("need at least one worker");
  for (const auto& [n, m] : grid.sizes) {
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    if (n < 2 || m < 1 || m > pairs) throw std::invalid_argument("invalid grid size");
  }
  for (double f : grid.negative_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("negative fraction outside [0, 1]");
  }

  std::vector<CellKey> cells;
  for (ModelKind model : options.models) {
    for (const auto& [n, m] : grid.sizes) {
      for (double f : grid.negative_fractions) cells.push_back({model, n, m, f});
    }
  }
  SweepResult result;
  if (options.repetitions == 0) return result;

  std::vector<std::vector<SweepInstance>> per_cell(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      try {
        per_cell[c] = run_cell(grid, options, cells[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(options.workers, static_cast<int>(cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& cell : per_cell) {
    result.cells.push_back(summarise_cell(cell));
    for (auto& inst : cell) result.instances.push_back(std::move(inst));
  }
  return result;
}

void write_sweep_csv(const std::vector<CellSummary>& cells, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const CellSummary& c : cells) {
    out << c.model << ',' << c.nodes << ',' << c.edges << ',' << format_number(c.negative_fraction)
        << ',' << c.instances << ',' << format_number(c.mean_seconds) << ','
        << format_number(c.sd_seconds) << ',' << format_number(c.mean_optimum) << ','
        << c.limit_hits << '\n';
  }
}

void write_sweep_csv(const std::vector<CellSummary>& cells, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_sweep_csv(cells, out);
}

std::vector<ReportRow> report_rows(const SweepResult& result) {
  std::vector<ReportRow> rows;
  for (const SweepInstance& i : result.instances) rows.push_back(i.row);
  return rows;
}

}  // namespace frustration
