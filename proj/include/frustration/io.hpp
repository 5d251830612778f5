#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "frustration/signed_graph.hpp"

namespace frustration {

/// Input error tied to a line of a text file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// A named graph with the mapping between dense ids and external labels.
struct Instance {
  std::string name;
  SignedGraph graph;
  std::vector<std::string> labels;  // dense id -> external label
  std::string source;               // file path or generator description
};

struct ReadOptions {
  /// Accept real weights in [-1,1] instead of signs.
  bool weighted = false;
};

/// Edge-list grammar, one record per line:
///
///   line    := blank | comment | node | edge
///   comment := '#' text            (but not '#@')
///   node    := '#@node' label      (declares a possibly isolated node)
///   edge    := label sep label sep value
///   sep     := one or more of ' ', '\t', ','
///   value   := '+' | '-' | '+1' | '-1' | '1'     (signed mode)
///            | decimal in [-1,1]                  (weighted mode)
///
/// Dense ids are assigned in order of first appearance.
Instance read_edge_list(const std::filesystem::path& path, const ReadOptions& options = {});
Instance parse_edge_list(std::istream& in, const std::string& name, const ReadOptions& options = {});

/// Writes a header comment, `#@node` lines for isolated nodes, then one edge
/// per line in edge-id order. Weights use the shortest round-trip decimal.
void write_edge_list(const Instance& inst, const std::filesystem::path& path);
void write_edge_list(const Instance& inst, std::ostream& out);

/// Wraps a generated or in-memory graph with labels "0".."n-1".
Instance make_instance(std::string name, SignedGraph graph, std::string source = {});

/// One solve, as reported in run summaries.
struct ReportRow {
  std::string instance;
  std::string model;
  int nodes = 0;
  int edges = 0;
  int negative_edges = 0;
  double optimum = 0.0;
  double root_objective = 0.0;
  long bnb_nodes = 0;
  double branching_factor = 1.0;
  double seconds = 0.0;
};

inline constexpr const char* kReportHeader =
    "instance,model,n,m,m_neg,optimum,root_objective,bnb_nodes,branching_factor,seconds";

void write_report_csv(const std::vector<ReportRow>& rows, const std::filesystem::path& path);
void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out);

/// Locale-independent number formatting (shortest round-trip form).
std::string format_number(double value);

}  // namespace frustration
