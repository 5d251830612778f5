// Command-line front end: generate, solve, oracle, export, solve-lp,
// add-constant and sweep.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "frustration/bench.hpp"
#include "frustration/generators.hpp"
#include "frustration/io.hpp"
#include "frustration/lp_format.hpp"
#include "frustration/oracle.hpp"
#include "frustration/solver.hpp"

using namespace frustration;

namespace {

struct ModelFlags {
  std::string model = "xor";
  int colours = 2;
  bool fix = true;
  std::string cuts;  // empty: lazy for the signed models, off otherwise
  std::string priorities = "on";
  bool preprocess = true;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f, bool with_preprocess) {
  cmd->add_option("--model", f.model, "and|xor|abs|weighted|multik")
      ->check(CLI::IsMember({"and", "xor", "abs", "weighted", "multik"}));
  cmd->add_option("--k", f.colours, "colours for the multik model")->check(CLI::PositiveNumber);
  cmd->add_flag("--fix,!--no-fix", f.fix, "fix the colour of a highest-degree node (default on)");
  cmd->add_option("--cuts", f.cuts, "triangle cuts: lazy|upfront|off")
      ->check(CLI::IsMember({"lazy", "upfront", "off"}));
  cmd->add_option("--priorities", f.priorities, "degree branching priorities: on|off")
      ->check(CLI::IsMember({"on", "off"}));
  if (with_preprocess) {
    cmd->add_flag("!--no-preprocess", f.preprocess, "skip pendant stripping and block splitting");
  }
}

SolverOptions solver_options(const ModelFlags& f) {
  SolverOptions o;
  o.model = parse_model_kind(f.model);
  o.colours = f.colours;
  o.fix_colour = f.fix;
  const bool signed_model = o.model != ModelKind::Weighted && o.model != ModelKind::Multicolour;
  o.cuts = f.cuts.empty() ? (signed_model ? CutMode::Lazy : CutMode::Off) : parse_cut_mode(f.cuts);
  o.priorities = f.priorities == "on";
  o.preprocess = f.preprocess;
  return o;
}

Instance load(const std::string& path, bool weighted) {
  ReadOptions ro;
  ro.weighted = weighted;
  return read_edge_list(path, ro);
}

std::string colouring_text(const Colouring& x) {
  std::ostringstream s;
  for (int i = 0; i < x.size(); ++i) s << (i ? " " : "") << x[i];
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact frustration index of signed graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a random signed graph as an edge list");
  std::string gen_model = "er";
  int gen_n = 0;
  std::optional<double> gen_rho;
  std::optional<long> gen_m;
  std::optional<int> gen_attach;
  double gen_neg = 0.0;
  std::uint64_t gen_seed = 0;
  bool gen_weighted = false;
  std::string gen_out;
  gen->add_option("--model", gen_model, "er|ba")->check(CLI::IsMember({"er", "ba"}));
  gen->add_option("--n", gen_n, "node count")->required();
  auto* rho_opt = gen->add_option("--rho", gen_rho, "edge density (er)");
  gen->add_option("--m", gen_m, "exact edge count")->excludes(rho_opt);
  gen->add_option("--attach", gen_attach, "edges per arriving node (ba)");
  gen->add_option("--neg-frac", gen_neg, "fraction of negative edges")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_flag("--weighted", gen_weighted, "draw weights in [-1,1]");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "compute the frustration index of an edge list");
  std::string solve_file;
  ModelFlags solve_flags;
  double gap = 0.0;
  double time_limit = -1.0;
  long node_limit = 0;
  std::string trace_file, csv_file, colouring_file;
  bool weighted_input = false;
  solve_cmd->add_option("FILE", solve_file, "edge list")->required()->check(CLI::ExistingFile);
  add_model_flags(solve_cmd, solve_flags, true);
  solve_cmd->add_option("--gap", gap, "relative gap at which to stop")->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_option("--time-limit", time_limit, "seconds");
  solve_cmd->add_option("--node-limit", node_limit, "branch-and-bound nodes");
  solve_cmd->add_option("--trace", trace_file, "write seconds,lower,upper rows");
  solve_cmd->add_option("--csv", csv_file, "write a one-row report CSV");
  solve_cmd->add_option("--colouring", colouring_file, "write 'label colour' lines");
  solve_cmd->add_flag("--weighted-input", weighted_input, "read real weights (implied by --model weighted)");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum for small graphs");
  std::string oracle_file;
  int oracle_k = 2;
  bool oracle_weighted = false;
  int oracle_cap = 20;
  oracle_cmd->add_option("FILE", oracle_file, "edge list")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--k", oracle_k, "number of colours")->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--weighted", oracle_weighted, "weighted objective (two colours)");
  oracle_cmd->add_option("--max-nodes", oracle_cap, "node cap for two-colour enumeration");

  // export
  auto* export_cmd = app.add_subcommand("export", "write the model of an edge list as an LP file");
  std::string export_file, export_out;
  ModelFlags export_flags;
  export_cmd->add_option("FILE", export_file, "edge list")->required()->check(CLI::ExistingFile);
  export_cmd->add_option("--out", export_out, "LP file")->required();
  add_model_flags(export_cmd, export_flags, false);

  // solve-lp
  auto* slp = app.add_subcommand("solve-lp", "solve an LP file with the built-in branch and bound");
  std::string slp_file;
  slp->add_option("FILE", slp_file, "LP file")->required()->check(CLI::ExistingFile);

  // add-constant
  auto* addc = app.add_subcommand("add-constant", "add an LP file's objective constant to an external optimum");
  std::string addc_file;
  double addc_value = 0.0;
  addc->add_option("FILE", addc_file, "LP file written by export")->required()->check(CLI::ExistingFile);
  addc->add_option("VALUE", addc_value, "optimum reported by the external solver")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "benchmark sweep over random graphs");
  std::string sweep_gen = "ba";
  std::vector<std::string> sweep_sizes;
  std::vector<double> sweep_fracs{0.3, 0.5, 0.7, 1.0};
  std::vector<std::string> sweep_models{"xor"};
  int sweep_reps = 10;
  std::uint64_t sweep_seed = 1;
  int sweep_workers = 1;
  double sweep_time = -1.0;
  std::string sweep_rows, sweep_summary;
  sweep_cmd->add_option("--generator", sweep_gen, "er|ba")->check(CLI::IsMember({"er", "ba"}));
  sweep_cmd->add_option("--size", sweep_sizes, "N:M, repeatable")->required();
  sweep_cmd->add_option("--neg-fracs", sweep_fracs, "negative fractions")->delimiter(',');
  sweep_cmd->add_option("--models", sweep_models, "models")->delimiter(',');
  sweep_cmd->add_option("--reps", sweep_reps, "graphs per cell")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sweep_seed, "seed of the first repetition");
  sweep_cmd->add_option("--workers", sweep_workers, "threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--time-limit", sweep_time, "seconds per instance");
  sweep_cmd->add_option("--rows", sweep_rows, "per-instance CSV");
  sweep_cmd->add_option("--summary", sweep_summary, "per-cell CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      GenSpec spec;
      spec.model = parse_graph_model(gen_model);
      spec.nodes = gen_n;
      spec.density = gen_rho;
      spec.edges = gen_m;
      spec.attachment = gen_attach;
      spec.negative_fraction = gen_neg;
      spec.seed = gen_seed;
      spec.weighted = gen_weighted;
      std::ostringstream name;
      name << gen_model << "_n" << gen_n << "_s" << gen_seed;
      const Instance inst = make_instance(name.str(), generate(spec), "generate");
      if (gen_out.empty()) {
        write_edge_list(inst, std::cout);
      } else {
        write_edge_list(inst, gen_out);
      }
    } else if (*solve_cmd) {
      SolverOptions options = solver_options(solve_flags);
      options.bnb.gap = gap;
      if (time_limit >= 0) options.bnb.time_limit = time_limit;
      options.bnb.node_limit = node_limit;
      const Instance inst = load(solve_file, weighted_input || options.model == ModelKind::Weighted);
      const SolveReport r = compute_frustration(inst.graph, options);
      std::cout << "instance: " << inst.name << '\n'
                << "model: " << solve_flags.model << '\n'
                << "n: " << inst.graph.num_nodes() << "  m: " << inst.graph.num_edges()
                << "  m_neg: " << inst.graph.num_negative() << '\n'
                << "status: " << to_string(r.status) << '\n'
                << "optimum: " << format_number(r.optimum) << '\n'
                << "lower_bound: " << format_number(r.lower_bound) << '\n'
                << "root_objective: " << format_number(r.root_objective) << '\n'
                << "bnb_nodes: " << r.nodes << '\n'
                << "variables: " << r.variables << '\n'
                << "branching_factor: " << format_number(r.branching_factor) << '\n'
                << "cuts_added: " << r.cuts_added << '\n'
                << "seconds: " << format_number(r.seconds) << '\n'
                << "colouring: " << colouring_text(r.incumbent) << '\n';
      if (!trace_file.empty()) {
        std::ofstream out(trace_file);
        if (!out) throw std::runtime_error("cannot write " + trace_file);
        out << "seconds,lower,upper\n";
        for (const TracePoint& p : r.trace) {
          out << format_number(p.seconds) << ',' << format_number(p.lower) << ','
              << format_number(p.upper) << '\n';
        }
      }
      if (!csv_file.empty()) {
        ReportRow row{inst.name,          solve_flags.model, inst.graph.num_nodes(),
                      inst.graph.num_edges(), inst.graph.num_negative(), r.optimum,
                      r.root_objective,   r.nodes,           r.branching_factor,
                      r.seconds};
        write_report_csv({row}, csv_file);
      }
      if (!colouring_file.empty()) {
        std::ofstream out(colouring_file);
        if (!out) throw std::runtime_error("cannot write " + colouring_file);
        for (int i = 0; i < r.incumbent.size(); ++i) out << inst.labels[i] << ' ' << r.incumbent[i] << '\n';
      }
    } else if (*oracle_cmd) {
      const Instance inst = load(oracle_file, oracle_weighted);
      if (oracle_weighted || inst.graph.weighted()) {
        if (oracle_k != 2) throw std::invalid_argument("the weighted oracle uses two colours");
        std::cout << format_number(brute_force_weighted(inst.graph, oracle_cap).value) << '\n';
      } else if (oracle_k == 2) {
        std::cout << brute_force_L(inst.graph, oracle_cap).count << '\n';
      } else {
        std::cout << brute_force_multicolour(inst.graph, oracle_k) << '\n';
      }
    } else if (*export_cmd) {
      const SolverOptions options = solver_options(export_flags);
      const Instance inst = load(export_file, options.model == ModelKind::Weighted);
      if (options.cuts != CutMode::Off &&
          (options.model == ModelKind::Weighted || options.model == ModelKind::Multicolour)) {
        throw std::domain_error("triangle cuts apply to the two-colour signed models only");
      }
      const IlpModel model = build_configured_model(inst.graph, options);
      export_lp(model, export_out);
      std::cout << "wrote " << export_out << ": " << model.num_vars() << " variables, "
                << model.num_constraints() << " constraints, " << model.cut_pool.size()
                << " lazy constraints, objective constant "
                << format_number(model.objective_constant) << '\n';
    } else if (*slp) {
      const IlpModel model = read_lp(std::filesystem::path(slp_file));
      SolutionDecoder decoder;
      if (!model.node_vars.empty()) {
        decoder = [&](const std::vector<double>& v) { return decode_colouring(model, v); };
      }
      const SolveReport r = branch_and_bound(model, BnbOptions{}, {}, decoder);
      std::cout << "status: " << to_string(r.status) << '\n'
                << "optimum: " << format_number(r.optimum) << '\n'
                << "bnb_nodes: " << r.nodes << '\n';
      if (r.incumbent.size() > 0) std::cout << "colouring: " << colouring_text(r.incumbent) << '\n';
    } else if (*addc) {
      std::cout << format_number(addc_value + read_objective_constant(addc_file)) << '\n';
    } else if (*sweep_cmd) {
      SweepGrid grid;
      grid.generator = parse_graph_model(sweep_gen);
      grid.negative_fractions = sweep_fracs;
      grid.base_seed = sweep_seed;
      for (const std::string& s : sweep_sizes) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("size must be N:M, got " + s);
        grid.sizes.emplace_back(std::stoi(s.substr(0, colon)), std::stol(s.substr(colon + 1)));
      }
      SweepOptions options;
      options.models.clear();
      for (const std::string& m : sweep_models) options.models.push_back(parse_model_kind(m));
      options.repetitions = sweep_reps;
      options.workers = sweep_workers;
      if (sweep_time >= 0) options.solver.bnb.time_limit = sweep_time;
      const SweepResult result = run_sweep(grid, options);
      if (!sweep_rows.empty()) write_report_csv(report_rows(result), sweep_rows);
      if (sweep_summary.empty()) {
        write_sweep_csv(result.cells, std::cout);
      } else {
        write_sweep_csv(result.cells, sweep_summary);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
