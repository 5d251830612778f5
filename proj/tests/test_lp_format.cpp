#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "frustration/bnb.hpp"
#include "frustration/lp_format.hpp"
#include "frustration/oracle.hpp"
#include "frustration/solver.hpp"

using namespace frustration;

namespace {

std::string text(const IlpModel& m) {
  std::ostringstream out;
  write_lp(m, out);
  return out.str();
}

std::filesystem::path scratch(const std::string& name) {
  const char* dir = std::getenv("FRUSTRATION_TMP");
  return std::filesystem::path(dir ? dir : ".") / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("AND model of the four-node example") {
  const SignedGraph g = fixtures::small_example();
  const IlpModel m = build_and(g);
  CHECK(m.num_vars() == 4 + 5);
  CHECK(m.num_constraints() == 2 * 2 + 3);
  const std::string lp = text(m);
  CHECK(lp.find("\\ Objective constant: 3\n") != std::string::npos);
  CHECK(lp.find("Minimize\n") != std::string::npos);
  CHECK(lp.find(" and_i_1_2: x_1_2 - x_1 <= 0\n") != std::string::npos);
  CHECK(lp.find(" and_ij_0_2: x_0_2 - x_0 - x_2 >= -1\n") != std::string::npos);
  CHECK(lp.find("Binaries\n x_0 x_1 x_2 x_3\n") != std::string::npos);
  CHECK(lp.find(" 0 <= x_0_2 <= 1\n") != std::string::npos);
  CHECK(lp.substr(lp.size() - 4) == "End\n");

  const IlpModel back = [&] {
    std::istringstream in(lp);
    return read_lp(in);
  }();
  CHECK(back.num_vars() == 9);
  CHECK(back.num_constraints() == 7);
  CHECK(back.objective_constant == 3);
  CHECK(back.kind == ModelKind::And);
  CHECK(back.integral_objective);
  CHECK(back.node_vars.size() == 4);
}

TEST_CASE("export is byte-identical for identical models") {
  const SignedGraph g = fixtures::random_graph(12, 10, 10);
  SolverOptions o;
  o.model = ModelKind::Xor;
  const IlpModel a = build_configured_model(g, o);
  const IlpModel b = build_configured_model(g, o);
  CHECK(text(a) == text(b));
  const auto p1 = scratch("export_a.lp"), p2 = scratch("export_b.lp");
  export_lp(a, p1);
  export_lp(b, p2);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(p1.string() + ".priorities") == slurp(p2.string() + ".priorities"));
  // Lazy cuts land in their own section.
  if (!a.cut_pool.empty()) CHECK(text(a).find("Lazy Constraints\n") != std::string::npos);
}

TEST_CASE("priority sidecar") {
  const SignedGraph s = fixtures::star(3);
  SolverOptions o;
  o.model = ModelKind::Abs;
  const IlpModel m = build_configured_model(s, o);
  std::ostringstream side;
  write_priorities(m, side);
  CHECK(side.str() == "x_0 3\nx_1 1\nx_2 1\nx_3 1\n");
  const auto path = scratch("star.lp");
  export_lp(m, path);
  const IlpModel back = read_lp(path);
  for (int v = 0; v < m.num_vars(); ++v) {
    const VarId w = [&] {
      for (int u = 0; u < back.num_vars(); ++u) {
        if (back.variables[u].name == m.variables[v].name) return u;
      }
      return -1;
    }();
    REQUIRE(w >= 0);
    CHECK(back.variables[w].priority == m.variables[v].priority);
    CHECK(back.variables[w].lower == m.variables[v].lower);
    CHECK(back.variables[w].upper == m.variables[v].upper);
    CHECK(back.variables[w].integer == m.variables[v].integer);
    CHECK(back.objective[w] == m.objective[v]);
  }
  CHECK(back.fixed_node == 0);
  CHECK(read_objective_constant(path) == 0.0);
}

TEST_CASE("export, read back and solve reproduces the optimum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SignedGraph g = fixtures::random_graph(seed, 2, 14);
    const int L = brute_force_L(g).count;
    for (ModelKind kind : {ModelKind::And, ModelKind::Xor, ModelKind::Abs}) {
      SolverOptions o;
      o.model = kind;
      o.cuts = seed % 2 ? CutMode::Lazy : CutMode::Upfront;
      std::istringstream in(text(build_configured_model(g, o)));
      const IlpModel back = read_lp(in);
      const SolveReport r = branch_and_bound(back, BnbOptions{});
      CHECK(r.optimum == doctest::Approx(L));
      // Same check through the graph-aware driver.
      CHECK(solve(back, g, BnbOptions{}).optimum == L);
    }
  }
}

TEST_CASE("external optimum plus the recorded constant") {
  const SignedGraph g = fixtures::complete(5, -1);
  const IlpModel m = build_and(g);
  const auto path = scratch("k5.lp");
  export_lp(m, path);
  CHECK(read_objective_constant(path) == 10);
  // An external solver reports the optimum without the constant.
  const double without = solve(m, g, BnbOptions{}).optimum - m.objective_constant;
  CHECK(without + read_objective_constant(path) == brute_force_L(g).count);
}

TEST_CASE("multi-colour and weighted models survive a round trip") {
  const SignedGraph g = fixtures::colour_example();
  const IlpModel mc = build_multicolour(g, 3);
  std::istringstream in(text(mc));
  const IlpModel back = read_lp(in);
  CHECK(back.kind == ModelKind::Multicolour);
  CHECK(back.colours == 3);
  CHECK(back.node_vars.size() == 12);
  CHECK(branch_and_bound(back, BnbOptions{}).optimum == doctest::Approx(0));

  const SignedGraph w(3, {{0, 1, 0.3}, {0, 2, -0.7}, {1, 2, 0.9}}, true);
  const IlpModel wm = build_weighted(w);
  std::istringstream win(text(wm));
  const IlpModel wback = read_lp(win);
  CHECK(branch_and_bound(wback, BnbOptions{}).optimum ==
        doctest::Approx(brute_force_weighted(w).value).epsilon(1e-9));
}

TEST_CASE("reader accepts common variants and rejects garbage") {
  const std::string variant =
      "\\ hand written\n"
      "Minimize\n obj: 2 a + 3 b\n   - c\n"
      "Subject To\n c1: a + b\n   >= 1\n c2: b - c =< 0\n"
      "Bounds\n -1 <= c <= 1\n b <= 1\n a free\n"
      "Generals\n b\n"
      "End\n";
  std::istringstream in(variant);
  const IlpModel m = read_lp(in);
  CHECK(m.num_vars() == 3);
  CHECK(m.num_constraints() == 2);
  CHECK(m.variables[0].lower == -INFINITY);
  CHECK(m.variables[1].integer);
  CHECK(m.objective == std::vector<double>{2, 3, -1});
  CHECK(m.constraints[0].sense == Sense::GreaterEqual);
  CHECK(m.constraints[1].sense == Sense::LessEqual);

  for (const char* bad : {"Minimize\n obj: x\nSubject To\n c: x 1\nEnd\n", "Minimize\n obj: x\n",
                          "Maximize\n obj: x\nEnd\n", "Minimize\n obj: x\nSubject To\n c: x >= abc\nEnd\n"}) {
    std::istringstream b(bad);
    CHECK_THROWS_AS(read_lp(b), std::runtime_error);
  }
  CHECK_THROWS(read_lp(scratch("missing.lp")));
  CHECK_THROWS(export_lp(build_xor(fixtures::small_example()), scratch("no/such/dir/x.lp")));
}
