#include "frustration/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace frustration {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges, bool weighted)
    : n_(n), weighted_(weighted) {
  if (n < 0) throw std::invalid_argument("node count must be non-negative");
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") has an endpoint outside 0.." +
                                  std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (weighted) {
      if (!(e.weight >= -1.0 && e.weight <= 1.0)) {
        throw std::invalid_argument("edge weight outside [-1,1]");
      }
    } else if (e.weight != 1.0 && e.weight != -1.0) {
      throw std::invalid_argument("edge sign must be +1 or -1");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t e = 1; e < edges.size(); ++e) {
    if (edges[e].u == edges[e - 1].u && edges[e].v == edges[e - 1].v) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(edges[e].u) + "," +
                                  std::to_string(edges[e].v) + ")");
    }
  }
  edges_ = std::move(edges);
  adjacency_.resize(n);
  index_.reserve(edges_.size() * 2);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.weight < 0.0) ++num_negative_;
    adjacency_[edge.u].push_back({edge.v, e});
    adjacency_[edge.v].push_back({edge.u, e});
    index_.emplace(key(edge.u, edge.v), e);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

int SignedGraph::degree(NodeId i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("node id out of range");
  return static_cast<int>(adjacency_[i].size());
}

NodeId SignedGraph::max_degree_node() const {
  if (n_ == 0) throw std::invalid_argument("max_degree_node of an empty graph");
  NodeId best = 0;
  for (NodeId i = 1; i < n_; ++i) {
    if (adjacency_[i].size() > adjacency_[best].size()) best = i;
  }
  return best;
}

std::optional<EdgeId> SignedGraph::find_edge(NodeId i, NodeId j) const {
  if (i > j) std::swap(i, j);
  auto it = index_.find(key(i, j));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SignedGraph SignedGraph::induced_subgraph(std::span<const NodeId> nodes) const {
  std::vector<NodeId> local(n_, -1);
  for (std::size_t p = 0; p < nodes.size(); ++p) local[nodes[p]] = static_cast<NodeId>(p);
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) sub.push_back({local[e.u], local[e.v], e.weight});
  }
  return SignedGraph(static_cast<int>(nodes.size()), std::move(sub), weighted_);
}

namespace {

void check_colouring(const SignedGraph& g, const Colouring& x) {
  if (x.size() != g.num_nodes()) {
    throw std::invalid_argument("colouring has " + std::to_string(x.size()) +
                                " entries for a graph with " +
                                std::to_string(g.num_nodes()) + " nodes");
  }
  for (int c : x.assignment) {
    if (c < 0 || c >= x.colours) throw std::invalid_argument("colour id out of range");
  }
}

}  // namespace

FrustrationSummary frustration_count(const SignedGraph& g, const Colouring& x) {
  if (g.weighted()) {
    throw std::invalid_argument("frustration_count needs a signed graph; use weighted_frustration");
  }
  check_colouring(g, x);
  FrustrationSummary out;
  out.frustrated.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const bool f = is_frustrated(edge.sign(), x[edge.u], x[edge.v]);
    out.frustrated[e] = f;
    out.count += f;
  }
  return out;
}

double weighted_frustration(const SignedGraph& g, const Colouring& x) {
  check_colouring(g, x);
  double total = 0.0;
  for (const Edge& e : g.edges()) total += weighted_edge_cost(e.weight, x[e.u] == x[e.v]);
  return total;
}

double density(const SignedGraph& g) {
  const double n = g.num_nodes();
  if (g.num_nodes() < 2) throw std::invalid_argument("density needs at least two nodes");
  return 2.0 * g.num_edges() / (n * (n - 1.0));
}

std::vector<Triangle> unbalanced_triangles(const SignedGraph& g) {
  std::vector<Triangle> out;
  std::vector<int> mark(g.num_nodes(), 0);  // sign of edge to the current i, 0 if absent
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    for (const Neighbor& nb : g.neighbors(i)) mark[nb.node] = g.edge(nb.edge).sign();
    for (const Neighbor& nj : g.neighbors(i)) {
      const NodeId j = nj.node;
      if (j <= i) continue;
      const int s_ij = g.edge(nj.edge).sign();
      for (const Neighbor& nk : g.neighbors(j)) {
        const NodeId k = nk.node;
        if (k <= j || mark[k] == 0) continue;
        if (s_ij * mark[k] * g.edge(nk.edge).sign() < 0) out.push_back({i, j, k});
      }
    }
    for (const Neighbor& nb : g.neighbors(i)) mark[nb.node] = 0;
  }
  return out;
}

BalanceResult is_balanced(const SignedGraph& g) {
  const int n = g.num_nodes();
  std::vector<int> colour(n, -1);
  std::vector<NodeId> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (NodeId root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::queue<NodeId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop();
      for (const Neighbor& nb : g.neighbors(u)) {
        const int want = g.edge(nb.edge).sign() > 0 ? colour[u] : 1 - colour[u];
        if (colour[nb.node] < 0) {
          colour[nb.node] = want;
          parent[nb.node] = u;
          depth[nb.node] = depth[u] + 1;
          queue.push(nb.node);
        } else if (colour[nb.node] != want) {
          // Tree paths to the common ancestor plus the conflicting edge form a
          // cycle with an odd number of negative edges.
          std::vector<NodeId> left{u}, right{nb.node};
          NodeId a = u, b = nb.node;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BalanceResult out;
          out.negative_cycle = std::move(left);
          out.negative_cycle.insert(out.negative_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  BalanceResult out;
  out.balanced = true;
  out.witness = Colouring(std::move(colour));
  return out;
}

}  // namespace frustration
