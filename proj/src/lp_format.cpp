#include "frustration/lp_format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "frustration/io.hpp"

namespace frustration {

namespace {

constexpr int kTermsPerLine = 8;

void write_terms(std::ostream& out, const std::vector<Term>& terms,
                 const std::vector<Variable>& vars) {
  int written = 0;
  for (const Term& t : terms) {
    if (t.coef == 0.0) continue;
    if (written > 0 && written % kTermsPerLine == 0) out << "\n   ";
    out << (t.coef < 0 ? " - " : (written == 0 ? " " : " + "));
    const double mag = std::fabs(t.coef);
    if (mag != 1.0) out << format_number(mag) << ' ';
    out << vars[t.var].name;
    ++written;
  }
  if (written == 0) out << " 0 " << (vars.empty() ? std::string("dummy") : vars.front().name);
}

const char* sense_token(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::GreaterEqual:
      return ">=";
    case Sense::Equal:
      return "=";
  }
  return "=";
}

std::string bound_text(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "+inf";
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  return format_number(v);
}

void write_rows(std::ostream& out, const std::vector<Constraint>& rows,
                const std::vector<Variable>& vars) {
  for (const Constraint& c : rows) {
    out << ' ' << c.name << ':';
    write_terms(out, c.terms, vars);
    out << ' ' << sense_token(c.sense) << ' ' << format_number(c.rhs) << '\n';
  }
}

bool is_binary(const Variable& v) { return v.integer && v.lower >= 0.0 && v.upper <= 1.0; }

}  // namespace

void write_lp(const IlpModel& model, std::ostream& out) {
  const auto& vars = model.variables;
  out << "\\ Model: " << to_string(model.kind) << '\n';
  out << "\\ Objective constant: " << format_number(model.objective_constant) << '\n';
  if (model.integral_objective) out << "\\ Integral objective\n";
  if (model.kind == ModelKind::Multicolour) out << "\\ Colours: " << model.colours << '\n';
  out << "Minimize\n obj:";
  std::vector<Term> objective;
  for (VarId v = 0; v < model.num_vars(); ++v) objective.push_back({v, model.objective[v]});
  write_terms(out, objective, vars);
  out << "\nSubject To\n";
  write_rows(out, model.constraints, vars);
  if (!model.cut_pool.empty()) {
    out << "Lazy Constraints\n";
    write_rows(out, model.cut_pool, vars);
  }
  out << "Bounds\n";
  for (const Variable& v : vars) {
    if (is_binary(v) && v.lower == 0.0 && v.upper == 1.0) continue;
    if (v.lower == v.upper) {
      out << ' ' << v.name << " = " << format_number(v.lower) << '\n';
    } else if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out << ' ' << v.name << " free\n";
    } else {
      out << ' ' << bound_text(v.lower) << " <= " << v.name << " <= " << bound_text(v.upper) << '\n';
    }
  }
  std::vector<std::string> binaries;
  std::vector<std::string> generals;
  for (const Variable& v : vars) {
    if (!v.integer) continue;
    (is_binary(v) ? binaries : generals).push_back(v.name);
  }
  auto write_names = [&](const char* header, const std::vector<std::string>& names) {
    if (names.empty()) return;
    out << header << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << ' ' << names[i];
      if (i % kTermsPerLine == kTermsPerLine - 1 || i + 1 == names.size()) out << '\n';
    }
  };
  write_names("Binaries", binaries);
  write_names("Generals", generals);
  out << "End\n";
}

void write_priorities(const IlpModel& model, std::ostream& out) {
  for (const Variable& v : model.variables) {
    if (v.priority != 0) out << v.name << ' ' << v.priority << '\n';
  }
}

void export_lp(const IlpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_lp(model, out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
  std::filesystem::path sidecar = path;
  sidecar += ".priorities";
  bool any = false;
  for (const Variable& v : model.variables) any = any || v.priority != 0;
  if (!any) return;
  std::ofstream side(sidecar, std::ios::binary);
  if (!side) throw std::runtime_error("cannot write " + sidecar.string());
  write_priorities(model, side);
}

namespace {

enum class Section { None, Objective, Rows, Lazy, Bounds, Binaries, Generals, End };

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct LpReader {
  std::string name;
  IlpModel model;
  std::map<std::string, VarId> index;
  int line = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
  }

  VarId var(const std::string& n) {
    auto it = index.find(n);
    if (it != index.end()) return it->second;
    // LP default bounds: [0, +inf), continuous.
    const VarId v = model.add_variable(n, 0.0, std::numeric_limits<double>::infinity(), false);
    index.emplace(n, v);
    return v;
  }

  static bool parse_double(const std::string& s, double& out) {
    const std::string t = lower(s);
    if (t == "inf" || t == "+inf" || t == "infinity" || t == "+infinity") {
      out = std::numeric_limits<double>::infinity();
      return true;
    }
    if (t == "-inf" || t == "-infinity") {
      out = -std::numeric_limits<double>::infinity();
      return true;
    }
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
  }

  static bool is_sense(const std::string& t) {
    return t == "<=" || t == ">=" || t == "=" || t == "=<" || t == "=>" || t == "<" || t == ">";
  }

  // Parses "[+|-] [coef] var ..." into terms.
  std::vector<Term> parse_expr(const std::vector<std::string>& tokens) {
    std::vector<Term> terms;
    double sign = 1.0;
    double coef = 1.0;
    bool have_coef = false;
    for (const std::string& t : tokens) {
      double value;
      if (t == "+" || t == "-") {
        sign = t == "-" ? -sign : sign;
      } else if (parse_double(t, value)) {
        if (have_coef) fail("two coefficients in a row");
        coef = value;
        have_coef = true;
      } else {
        terms.push_back({var(t), sign * coef});
        sign = 1.0;
        coef = 1.0;
        have_coef = false;
      }
    }
    if (have_coef && coef != 0.0) fail("constant term in expression");
    LinearExpr e{terms, 0.0};
    e.normalise();
    return e.terms;
  }

  void add_row(std::vector<std::string> tokens, bool lazy) {
    Constraint c;
    if (!tokens.empty() && tokens.front().back() == ':') {
      c.name = tokens.front().substr(0, tokens.front().size() - 1);
      tokens.erase(tokens.begin());
    } else {
      c.name = "r" + std::to_string(model.constraints.size() + model.cut_pool.size());
    }
    if (tokens.size() < 3 || !is_sense(tokens[tokens.size() - 2])) fail("malformed constraint");
    const std::string s = tokens[tokens.size() - 2];
    c.sense = s[0] == '<' || s == "=<" ? Sense::LessEqual
              : s[0] == '>' || s == "=>" ? Sense::GreaterEqual
                                         : Sense::Equal;
    if (!parse_double(tokens.back(), c.rhs)) fail("bad right-hand side");
    tokens.resize(tokens.size() - 2);
    c.terms = parse_expr(tokens);
    (lazy ? model.cut_pool : model.constraints).push_back(std::move(c));
  }

  void add_bound(const std::vector<std::string>& t) {
    double a, b;
    if (t.size() == 2 && lower(t[1]) == "free") {
      Variable& v = model.variables[var(t[0])];
      v.lower = -std::numeric_limits<double>::infinity();
      v.upper = std::numeric_limits<double>::infinity();
    } else if (t.size() == 5 && parse_double(t[0], a) && parse_double(t[4], b)) {
      Variable& v = model.variables[var(t[2])];
      v.lower = a;
      v.upper = b;
    } else if (t.size() == 3 && parse_double(t[2], a)) {
      Variable& v = model.variables[var(t[0])];
      if (t[1] == "=") {
        v.lower = v.upper = a;
      } else if (t[1] == "<=" || t[1] == "=<") {
        v.upper = a;
      } else if (t[1] == ">=" || t[1] == "=>") {
        v.lower = a;
      } else {
        fail("bad bound");
      }
    } else if (t.size() == 3 && parse_double(t[0], a)) {
      Variable& v = model.variables[var(t[2])];
      if (t[1] == "<=" || t[1] == "=<") {
        v.lower = a;
      } else if (t[1] == ">=" || t[1] == "=>") {
        v.upper = a;
      } else {
        fail("bad bound");
      }
    } else {
      fail("bad bound");
    }
  }

  IlpModel run(std::istream& in) {
    Section section = Section::None;
    std::vector<std::string> pending;  // tokens of the current statement
    std::vector<std::pair<std::string, double>> objective;
    std::vector<std::string> objective_tokens;
    std::vector<VarId> binaries;
    bool objective_done = false;
    auto flush = [&] {
      if (section == Section::Objective && !objective_done) {
        // Parse now so variables are numbered in order of first appearance.
        if (!objective_tokens.empty() && objective_tokens.front().back() == ':') {
          objective_tokens.erase(objective_tokens.begin());
        }
        for (const Term& t : parse_expr(objective_tokens)) objective.emplace_back(model.variables[t.var].name, t.coef);
        objective_done = true;
      }
      if (pending.empty()) return;
      if (section == Section::Rows || section == Section::Lazy) add_row(pending, section == Section::Lazy);
      pending.clear();
    };
    std::string text;
    while (std::getline(in, text)) {
      ++line;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (!text.empty() && text[0] == '\\') {
        static const std::regex constant(R"(\\\s*Objective constant:\s*(\S+))");
        static const std::regex kind(R"(\\\s*Model:\s*(\S+))");
        static const std::regex colours(R"(\\\s*Colours:\s*(\d+))");
        std::smatch m;
        if (std::regex_search(text, m, constant)) {
          if (!parse_double(m[1], model.objective_constant)) fail("bad objective constant");
        } else if (std::regex_search(text, m, kind)) {
          const std::string k = m[1];
          model.kind = k == "generic" ? ModelKind::Generic : parse_model_kind(k);
        } else if (std::regex_search(text, m, colours)) {
          model.colours = std::stoi(m[1]);
        } else if (text.find("Integral objective") != std::string::npos) {
          model.integral_objective = true;
        }
        continue;
      }
      std::istringstream ss(text);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (tokens.empty()) continue;
      const std::string head = lower(text.substr(text.find_first_not_of(" \t")));
      const bool indented = text[0] == ' ' || text[0] == '\t';
      if (!indented) {
        Section next = Section::None;
        if (head == "minimize" || head == "minimise" || head == "min") next = Section::Objective;
        else if (head == "subject to" || head == "st" || head == "s.t.") next = Section::Rows;
        else if (head == "lazy constraints") next = Section::Lazy;
        else if (head == "bounds") next = Section::Bounds;
        else if (head == "binaries" || head == "binary") next = Section::Binaries;
        else if (head == "generals" || head == "general") next = Section::Generals;
        else if (head == "end") next = Section::End;
        if (next != Section::None) {
          flush();
          section = next;
          continue;
        }
        if (head == "maximize" || head == "maximise") fail("only minimisation is supported");
      }
      switch (section) {
        case Section::Objective:
          for (auto& t : tokens) objective_tokens.push_back(t);
          break;
        case Section::Rows:
        case Section::Lazy:
          // A statement starts with a "name:" token.
          if (tokens.front().back() == ':') flush();
          for (auto& t : tokens) pending.push_back(t);
          if (pending.size() >= 2 && is_sense(pending[pending.size() - 2])) flush();
          break;
        case Section::Bounds:
          add_bound(tokens);
          break;
        case Section::Binaries:
          for (auto& t : tokens) binaries.push_back(var(t));
          break;
        case Section::Generals:
          for (auto& t : tokens) model.variables[var(t)].integer = true;
          break;
        case Section::None:
          fail("content before Minimize");
        case Section::End:
          break;
      }
    }
    flush();
    if (section != Section::End) fail("missing End");

    model.objective.assign(model.num_vars(), 0.0);
    for (const auto& [var_name, coef] : objective) model.objective[index.at(var_name)] = coef;
    for (VarId v : binaries) {
      Variable& x = model.variables[v];
      x.integer = true;
      // An explicit bound (such as a fixing) overrides the binary box.
      x.lower = std::max(x.lower, 0.0);
      x.upper = std::min(x.upper, 1.0);
    }
    restore_node_vars();
    return std::move(model);
  }

  void restore_node_vars() {
    if (model.kind == ModelKind::Generic) return;
    const bool multi = model.kind == ModelKind::Multicolour;
    const int per_node = multi ? model.colours : 1;
    std::vector<VarId> vars;
    for (int i = 0;; ++i) {
      bool found = true;
      for (int c = 0; c < per_node && found; ++c) {
        const std::string n = "x_" + std::to_string(i) + (multi ? "_c" + std::to_string(c) : "");
        auto it = index.find(n);
        if (it == index.end()) found = false;
        else vars.push_back(it->second);
      }
      if (!found) {
        vars.resize(static_cast<std::size_t>(i) * per_node);
        break;
      }
    }
    model.node_vars = std::move(vars);
    for (int i = 0; i < model.num_nodes(); ++i) {
      const Variable& v = model.variables[model.node_var(i)];
      if (v.lower == v.upper && v.lower == 1.0) model.fixed_node = i;
    }
  }
};

}  // namespace

IlpModel read_lp(std::istream& in, const std::string& name) {
  LpReader reader;
  reader.name = name;
  return reader.run(in);
}

IlpModel read_lp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  IlpModel model = read_lp(in, path.string());
  std::filesystem::path sidecar = path;
  sidecar += ".priorities";
  std::ifstream side(sidecar);
  if (side) {
    std::map<std::string, VarId> index;
    for (VarId v = 0; v < model.num_vars(); ++v) index.emplace(model.variables[v].name, v);
    std::string var_name;
    int priority;
    while (side >> var_name >> priority) {
      auto it = index.find(var_name);
      if (it == index.end()) throw std::runtime_error("priority for unknown variable " + var_name);
      model.variables[it->second].priority = priority;
    }
  }
  return model;
}

double read_objective_constant(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  static const std::regex constant(R"(\\\s*Objective constant:\s*(\S+))");
  std::string text;
  std::smatch m;
  while (std::getline(in, text)) {
    if (std::regex_search(text, m, constant)) return std::stod(m[1]);
  }
  return 0.0;
}

}  // namespace frustration
