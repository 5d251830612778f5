#include "frustration/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace frustration {

ParseError::ParseError(const std::string& file, int line, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t p = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (p < line.size()) {
    while (p < line.size() && is_sep(line[p])) ++p;
    const std::size_t start = p;
    while (p < line.size() && !is_sep(line[p])) ++p;
    if (p > start) fields.push_back(line.substr(start, p - start));
  }
  return fields;
}

std::optional<double> parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_sign(std::string_view text) {
  if (text == "+" || text == "+1" || text == "1") return 1.0;
  if (text == "-" || text == "-1") return -1.0;
  return std::nullopt;
}

}  // namespace

Instance parse_edge_list(std::istream& in, const std::string& name, const ReadOptions& options) {
  Instance inst;
  inst.name = name;
  inst.source = name;
  std::unordered_map<std::string, NodeId> ids;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.emplace(std::string(label), static_cast<NodeId>(inst.labels.size()));
    if (inserted) inst.labels.emplace_back(label);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (view.starts_with("#@node")) {
      auto fields = split_fields(view.substr(6));
      if (fields.size() != 1) throw ParseError(name, line_no, "expected '#@node <label>'");
      intern(fields[0]);
      continue;
    }
    if (view.starts_with("#")) continue;
    auto fields = split_fields(view);
    if (fields.empty()) continue;
    if (fields.size() != 3) {
      throw ParseError(name, line_no, "expected 'u v value', got " + std::to_string(fields.size()) +
                                          " fields");
    }
    std::optional<double> value =
        options.weighted ? parse_double(fields[2]) : parse_sign(fields[2]);
    if (!value) {
      throw ParseError(name, line_no,
                       "bad " + std::string(options.weighted ? "weight" : "sign") + " '" +
                           std::string(fields[2]) + "'");
    }
    if (options.weighted && !(*value >= -1.0 && *value <= 1.0)) {
      throw ParseError(name, line_no, "weight " + std::string(fields[2]) + " outside [-1,1]");
    }
    if (fields[0] == fields[1]) {
      throw ParseError(name, line_no, "self-loop at '" + std::string(fields[0]) + "'");
    }
    NodeId u = intern(fields[0]);
    NodeId v = intern(fields[1]);
    if (u > v) std::swap(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (!seen.insert(key).second) {
      throw ParseError(name, line_no, "duplicate edge '" + std::string(fields[0]) + " " +
                                          std::string(fields[1]) + "'");
    }
    edges.push_back({u, v, *value});
  }
  inst.graph = SignedGraph(static_cast<int>(inst.labels.size()), std::move(edges), options.weighted);
  return inst;
}

Instance read_edge_list(const std::filesystem::path& path, const ReadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Instance inst = parse_edge_list(in, path.string(), options);
  inst.name = path.stem().string();
  return inst;
}

std::string format_number(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_edge_list(const Instance& inst, std::ostream& out) {
  const SignedGraph& g = inst.graph;
  out << "# " << (inst.name.empty() ? "signed graph" : inst.name) << ": n=" << g.num_nodes()
      << " m=" << g.num_edges() << " m_neg=" << g.num_negative()
      << (g.weighted() ? " weighted" : " signed") << '\n';
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    if (g.degree(i) == 0) out << "#@node " << inst.labels[i] << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << inst.labels[e.u] << ' ' << inst.labels[e.v] << ' ';
    if (g.weighted()) {
      out << format_number(e.weight);
    } else {
      out << (e.weight > 0 ? "+1" : "-1");
    }
    out << '\n';
  }
}

void write_edge_list(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(inst, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Instance make_instance(std::string name, SignedGraph graph, std::string source) {
  Instance inst;
  inst.name = std::move(name);
  inst.labels.reserve(graph.num_nodes());
  for (NodeId i = 0; i < graph.num_nodes(); ++i) inst.labels.push_back(std::to_string(i));
  inst.graph = std::move(graph);
  inst.source = std::move(source);
  return inst;
}

void write_report_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << kReportHeader << '\n';
  for (const ReportRow& r : rows) {
    out << r.instance << ',' << r.model << ',' << r.nodes << ',' << r.edges << ','
        << r.negative_edges << ',' << format_number(r.optimum) << ','
        << format_number(r.root_objective) << ',' << r.bnb_nodes << ','
        << format_number(r.branching_factor) << ',' << format_number(r.seconds) << '\n';
  }
}

void write_report_csv(const std::vector<ReportRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_report_csv(rows, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace frustration
