#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "frustration/oracle.hpp"
#include "frustration/signed_graph.hpp"

using namespace frustration;

TEST_CASE("construction validates and normalises edges") {
  SignedGraph g(3, {{2, 0, -1}, {1, 0, 1}});
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edge(0) == Edge{0, 1, 1});
  CHECK(g.edge(1) == Edge{0, 2, -1});
  CHECK(g.num_positive() == 1);
  CHECK(g.num_negative() == 1);
  CHECK(g.find_edge(2, 0) == 1);
  CHECK_FALSE(g.find_edge(1, 2).has_value());

  CHECK_THROWS_AS(SignedGraph(2, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 1.5}}, true), std::invalid_argument);
  CHECK_NOTHROW(SignedGraph(2, {{0, 1, 0.5}}, true));
}

TEST_CASE("frustration count on the four-node example") {
  const SignedGraph g = fixtures::small_example();
  const auto two = frustration_count(g, Colouring({0, 0, 0, 1}));
  CHECK(two.count == 2);
  CHECK(two.frustrated[*g.find_edge(0, 2)]);
  CHECK(two.frustrated[*g.find_edge(2, 3)]);

  const auto one = frustration_count(g, Colouring({0, 0, 1, 1}));
  CHECK(one.count == 1);
  CHECK(one.frustrated[*g.find_edge(1, 2)]);

  CHECK(frustration_count(fixtures::triangle(1, 1, 1), Colouring({1, 1, 1})).count == 0);
  CHECK_THROWS_AS(frustration_count(g, Colouring({0, 1})), std::invalid_argument);
}

TEST_CASE("density") {
  CHECK(density(fixtures::complete(5, 1)) == doctest::Approx(1.0));
  SignedGraph tiny(1, {});
  CHECK_THROWS_AS(density(tiny), std::invalid_argument);
  // Table-sized instances: only the counts matter.
  std::vector<Edge> edges;
  for (int i = 0; i < 60 && static_cast<int>(edges.size()) < 539; ++i) {
    for (int j = i + 1; j < 60 && static_cast<int>(edges.size()) < 539; ++j) edges.push_back({i, j, 1});
  }
  CHECK(density(SignedGraph(60, edges)) == doctest::Approx(539.0 / 1770.0));
  CHECK(539.0 / 1770.0 == doctest::Approx(0.3045).epsilon(1e-3));
  CHECK(2.0 * 1209 / (70.0 * 69.0) == doctest::Approx(0.5006).epsilon(1e-3));
}

TEST_CASE("unbalanced triangles") {
  CHECK(unbalanced_triangles(fixtures::triangle(1, 1, -1)) == std::vector<Triangle>{{0, 1, 2}});
  CHECK(unbalanced_triangles(fixtures::complete(4, 1)).empty());
  const auto t = unbalanced_triangles(fixtures::complete(4, -1));
  CHECK(t == std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("balance witness and certificate") {
  const auto pos = is_balanced(fixtures::complete(4, 1));
  CHECK(pos.balanced);
  CHECK(pos.witness.assignment == std::vector<int>{0, 0, 0, 0});

  const SignedGraph edge(2, {{0, 1, -1}});
  const auto neg = is_balanced(edge);
  CHECK(neg.balanced);
  CHECK(neg.witness[0] != neg.witness[1]);

  const auto tri = is_balanced(fixtures::triangle(1, 1, -1));
  CHECK_FALSE(tri.balanced);
  CHECK(tri.negative_cycle.size() == 3);
}

TEST_CASE("degrees and tie-breaking") {
  const SignedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(path.degree(1) == 2);
  CHECK(fixtures::star(5).max_degree_node() == 0);
  // Nodes 1 and 2 both have degree 3.
  const SignedGraph tie(5, {{1, 0, 1}, {1, 3, 1}, {1, 2, 1}, {2, 4, 1}, {2, 0, 1}});
  CHECK(tie.max_degree_node() == 1);
  CHECK_THROWS(path.degree(3));
  CHECK_THROWS(SignedGraph().max_degree_node());
}

TEST_CASE("induced subgraph renumbers in the given order") {
  const SignedGraph g = fixtures::small_example();
  const std::vector<NodeId> keep{3, 2, 1};
  const SignedGraph h = g.induced_subgraph(keep);
  CHECK(h.num_nodes() == 3);
  CHECK(h.num_edges() == 3);
  CHECK(h.edge(*h.find_edge(0, 1)).weight == 1);   // 3-2
  CHECK(h.edge(*h.find_edge(0, 2)).weight == -1);  // 3-1
}

TEST_CASE("weighted frustration reduces to the count for unit weights") {
  const SignedGraph g = fixtures::small_example();
  for (int mask = 0; mask < 16; ++mask) {
    Colouring x({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
    CHECK(weighted_frustration(g, x) == frustration_count(g, x).count);
  }
  const SignedGraph w(2, {{0, 1, 0.0}}, true);
  CHECK(weighted_frustration(w, Colouring({0, 0})) == doctest::Approx(0.5));
  CHECK(weighted_frustration(w, Colouring({0, 1})) == doctest::Approx(0.5));
}

TEST_CASE("properties over random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const SignedGraph g = fixtures::random_graph(seed, 2, 12);
    const int n = g.num_nodes();
    Colouring x{std::vector<int>(n)};
    std::uint64_t bits = seed * 2654435761ULL;
    for (int i = 0; i < n; ++i) x.assignment[i] = static_cast<int>((bits >> (i % 60)) & 1);
    const int count = frustration_count(g, x).count;
    CHECK(count >= 0);
    CHECK(count <= g.num_edges());

    Colouring flipped = x;
    for (int& c : flipped.assignment) c = 1 - c;
    CHECK(frustration_count(g, flipped).count == count);

    // Switching: negate every edge across a cut (S, V \ S) and flip the
    // colours inside S; the count is unchanged.
    std::vector<bool> in_s(n);
    for (int i = 0; i < n; ++i) in_s[i] = ((seed * 40503U + i * 7919U) >> 3) & 1;
    std::vector<Edge> switched(g.edges().begin(), g.edges().end());
    for (Edge& e : switched) {
      if (in_s[e.u] != in_s[e.v]) e.weight = -e.weight;
    }
    const SignedGraph h(n, switched);
    Colouring y = x;
    for (int i = 0; i < n; ++i) {
      if (in_s[i]) y.assignment[i] = 1 - y.assignment[i];
    }
    CHECK(frustration_count(h, y).count == count);

    const auto balance = is_balanced(g);
    CHECK(balance.balanced == (brute_force_L(g).count == 0));
    if (balance.balanced) {
      CHECK(frustration_count(g, balance.witness).count == 0);
    } else {
      // The certificate is a cycle with an odd number of negative edges.
      const auto& cycle = balance.negative_cycle;
      REQUIRE(cycle.size() >= 3);
      int negatives = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto e = g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        REQUIRE(e.has_value());
        negatives += g.edge(*e).sign() < 0;
      }
      CHECK(negatives % 2 == 1);
    }

    const auto tri = unbalanced_triangles(g);
    std::size_t expected = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const auto a = g.find_edge(i, j), b = g.find_edge(i, k), c = g.find_edge(j, k);
          if (a && b && c && g.edge(*a).sign() * g.edge(*b).sign() * g.edge(*c).sign() < 0) ++expected;
        }
      }
    }
    CHECK(tri.size() == expected);
  }
}
