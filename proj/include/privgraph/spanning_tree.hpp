// Copyright 2026 The privgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PRIVGRAPH_SPANNING_TREE_HPP_
#define PRIVGRAPH_SPANNING_TREE_HPP_

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"

namespace privgraph {

// Parent pointers of a rooted spanning tree; parent[root] == -1.
struct ParentArray {
  VertexId root = 0;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
};

// Deterministic BFS tree of the undirected view, rooted at `root`.
inline ParentArray BfsTree(const WeightedGraph& g, VertexId root) {
  g.CheckVertex(root);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ParentArray t;
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  seen[static_cast<std::size_t>(root)] = true;
  frontier.push(root);
  std::size_t visited = 1;
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (const Incidence& inc : g.incident(u)) {
      const auto vi = static_cast<std::size_t>(inc.neighbor);
      if (seen[vi]) continue;
      seen[vi] = true;
      t.parent[vi] = u;
      t.parent_edge[vi] = inc.edge;
      frontier.push(inc.neighbor);
      ++visited;
    }
  }
  if (visited != n) {
    const auto it = std::find(seen.begin(), seen.end(), false);
    throw DisconnectedGraphError(static_cast<VertexId>(it - seen.begin()));
  }
  return t;
}

inline ParentArray SpanningTree(const WeightedGraph& g) { return BfsTree(g, 0); }

inline void CheckConnected(const WeightedGraph& g) { (void)BfsTree(g, 0); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

// Kruskal over the undirected view. Edges are considered by (weight, id), so
// equal-weight ties resolve to the smaller edge id. Negative weights are fine.
// Returns the chosen edge ids in ascending order.
inline std::vector<EdgeId> MinimumSpanningTree(const WeightedGraph& g,
                                               const WeightFunction& w) {
  CheckWeights(g, w);
  CheckConnected(g);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return w[a] < w[b]; });
  UnionFind uf(static_cast<std::size_t>(g.vertex_count()));
  std::vector<EdgeId> tree;
  tree.reserve(static_cast<std::size_t>(g.vertex_count() - 1));
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (uf.Union(static_cast<std::size_t>(ed.tail),
                 static_cast<std::size_t>(ed.head))) {
      tree.push_back(e);
      if (tree.size() + 1 == static_cast<std::size_t>(g.vertex_count())) break;
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

// True when `edge_ids` is a spanning tree of g's undirected view.
inline bool IsSpanningTree(const WeightedGraph& g,
                           const std::vector<EdgeId>& edge_ids) {
  if (edge_ids.size() + 1 != static_cast<std::size_t>(g.vertex_count())) {
    return false;
  }
  UnionFind uf(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (!uf.Union(static_cast<std::size_t>(ed.tail),
                  static_cast<std::size_t>(ed.head))) {
      return false;
    }
  }
  return true;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_SPANNING_TREE_HPP_
