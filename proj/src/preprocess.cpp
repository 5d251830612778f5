#include "frustration/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace frustration {

StrippedGraph strip_degree_le_one(const SignedGraph& g) {
  const int n = g.num_nodes();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::queue<NodeId> pending;
  for (NodeId i = 0; i < n; ++i) {
    degree[i] = g.degree(i);
    if (degree[i] <= 1) pending.push(i);
  }
  StrippedGraph out;
  while (!pending.empty()) {
    const NodeId v = pending.front();
    pending.pop();
    if (removed[v]) continue;
    removed[v] = 1;
    if (degree[v] == 0) {
      out.removed.push_back({v, -1, 0.0});
      continue;
    }
    for (const Neighbor& nb : g.neighbors(v)) {
      if (removed[nb.node]) continue;
      const double w = g.edge(nb.edge).weight;
      out.removed.push_back({v, nb.node, w});
      out.removed_cost += (1.0 - std::fabs(w)) / 2.0;
      if (--degree[nb.node] <= 1) pending.push(nb.node);
      break;
    }
    degree[v] = 0;
  }
  for (NodeId i = 0; i < n; ++i) {
    if (!removed[i]) out.to_original.push_back(i);
  }
  out.graph = g.induced_subgraph(out.to_original);
  return out;
}

Colouring StrippedGraph::extend(const Colouring& reduced, int original_nodes) const {
  if (reduced.size() != graph.num_nodes()) {
    throw std::invalid_argument("colouring does not match the reduced graph");
  }
  std::vector<int> colour(original_nodes, 0);
  for (NodeId r = 0; r < reduced.size(); ++r) colour[to_original[r]] = reduced[r];
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    if (it->neighbor < 0) {
      colour[it->node] = 0;
    } else {
      const int c = colour[it->neighbor];
      colour[it->node] = it->weight >= 0.0 ? c : 1 - c;
    }
  }
  return Colouring(std::move(colour));
}

std::vector<Block> split_blocks(const SignedGraph& g) {
  const int n = g.num_nodes();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<NodeId>> components;

  struct Frame {
    NodeId node;
    EdgeId via;  // edge used to enter node, -1 for the root
    std::size_t next;
  };
  int timer = 0;
  std::vector<char> in_block(n, 0);
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nbrs = g.neighbors(top.node);
      if (top.next < nbrs.size()) {
        const Neighbor nb = nbrs[top.next++];
        if (nb.edge == top.via) continue;
        if (disc[nb.node] < 0) {
          edge_stack.push_back(nb.edge);
          disc[nb.node] = low[nb.node] = timer++;
          stack.push_back({nb.node, nb.edge, 0});
        } else if (disc[nb.node] < disc[top.node]) {
          edge_stack.push_back(nb.edge);
          low[top.node] = std::min(low[top.node], disc[nb.node]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      const NodeId parent = stack.back().node;
      low[parent] = std::min(low[parent], low[done.node]);
      if (low[done.node] >= disc[parent]) {
        std::vector<NodeId> nodes;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          for (NodeId x : {g.edge(e).u, g.edge(e).v}) {
            if (!in_block[x]) {
              in_block[x] = 1;
              nodes.push_back(x);
            }
          }
          if (e == done.via) break;
        }
        for (NodeId x : nodes) in_block[x] = 0;
        std::sort(nodes.begin(), nodes.end());
        components.push_back(std::move(nodes));
      }
    }
  }
  std::sort(components.begin(), components.end());
  std::vector<Block> blocks;
  blocks.reserve(components.size());
  for (auto& nodes : components) {
    Block b{g.induced_subgraph(nodes), std::move(nodes)};
    blocks.push_back(std::move(b));
  }
  return blocks;
}

Colouring merge_block_colourings(const std::vector<Block>& blocks,
                                 const std::vector<Colouring>& colourings, int n) {
  if (blocks.size() != colourings.size()) {
    throw std::invalid_argument("one colouring per block required");
  }
  std::vector<std::vector<int>> blocks_of(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (NodeId v : blocks[b].to_original) blocks_of[v].push_back(static_cast<int>(b));
  }
  std::vector<int> colour(n, -1);
  std::vector<char> done(blocks.size(), 0);
  for (std::size_t start = 0; start < blocks.size(); ++start) {
    if (done[start]) continue;
    std::queue<int> queue;
    queue.push(static_cast<int>(start));
    done[start] = 1;
    while (!queue.empty()) {
      const int b = queue.front();
      queue.pop();
      const Block& block = blocks[b];
      const Colouring& local = colourings[b];
      int flip = 0;
      for (NodeId r = 0; r < local.size(); ++r) {
        const int existing = colour[block.to_original[r]];
        if (existing >= 0) {
          flip = existing != local[r];
          break;
        }
      }
      for (NodeId r = 0; r < local.size(); ++r) {
        const NodeId v = block.to_original[r];
        if (colour[v] < 0) colour[v] = flip ? 1 - local[r] : local[r];
        for (int next : blocks_of[v]) {
          if (!done[next]) {
            done[next] = 1;
            queue.push(next);
          }
        }
      }
    }
  }
  for (int& c : colour) c = std::max(c, 0);
  return Colouring(std::move(colour));
}

}  // namespace frustration
