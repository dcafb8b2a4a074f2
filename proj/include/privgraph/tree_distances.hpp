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


#ifndef PRIVGRAPH_TREE_DISTANCES_HPP_
#define PRIVGRAPH_TREE_DISTANCES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"
#include "privgraph/noise.hpp"
#include "privgraph/numeric.hpp"
#include "privgraph/spanning_tree.hpp"

namespace privgraph {

// A tree topology hung from a root. children[v] follow edge-id order.
class RootedTree {
 public:
  RootedTree(const WeightedGraph& g, VertexId root) {
    if (g.edge_count() != g.vertex_count() - 1) {
      throw InvalidArgument("not a tree: V = " +
                            std::to_string(g.vertex_count()) + " but E = " +
                            std::to_string(g.edge_count()));
    }
    ParentArray bfs = BfsTree(g, root);
    root_ = root;
    parent_ = std::move(bfs.parent);
    parent_edge_ = std::move(bfs.parent_edge);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    children_.assign(n, {});
    depth_.assign(n, 0);
    // BFS order: parents precede children.
    order_.reserve(n);
    order_.push_back(root);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const VertexId u = order_[i];
      for (const Incidence& inc : g.incident(u)) {
        if (parent_edge_[static_cast<std::size_t>(inc.neighbor)] == inc.edge &&
            inc.neighbor != root) {
          children_[static_cast<std::size_t>(u)].push_back(inc.neighbor);
          depth_[static_cast<std::size_t>(inc.neighbor)] =
              depth_[static_cast<std::size_t>(u)] + 1;
          order_.push_back(inc.neighbor);
        }
      }
    }
    subtree_size_.assign(n, 1);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const VertexId p = parent_[static_cast<std::size_t>(*it)];
      if (p >= 0) {
        subtree_size_[static_cast<std::size_t>(p)] +=
            subtree_size_[static_cast<std::size_t>(*it)];
      }
    }
  }

  VertexId root() const { return root_; }
  int size() const { return static_cast<int>(order_.size()); }
  VertexId parent(VertexId v) const { return parent_.at(static_cast<std::size_t>(v)); }
  EdgeId parent_edge(VertexId v) const {
    return parent_edge_.at(static_cast<std::size_t>(v));
  }
  const std::vector<VertexId>& children(VertexId v) const {
    return children_.at(static_cast<std::size_t>(v));
  }
  int depth(VertexId v) const { return depth_.at(static_cast<std::size_t>(v)); }
  int subtree_size(VertexId v) const {
    return subtree_size_.at(static_cast<std::size_t>(v));
  }
  const std::vector<VertexId>& bfs_order() const { return order_; }

  VertexId LowestCommonAncestor(VertexId x, VertexId y) const {
    while (depth(x) > depth(y)) x = parent(x);
    while (depth(y) > depth(x)) y = parent(y);
    while (x != y) {
      x = parent(x);
      y = parent(y);
    }
    return x;
  }

 private:
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  std::vector<VertexId> order_;
};

// The vertex whose subtree holds more than half the tree while every child
// subtree holds at most half: walk down from the root into the unique
// oversized child until none is left.
inline VertexId FindSplitter(const RootedTree& t) {
  if (t.size() < 2) throw InvalidArgument("splitter needs at least 2 vertices");
  const int n = t.size();
  VertexId v = t.root();
  for (;;) {
    VertexId next = -1;
    for (VertexId c : t.children(v)) {
      if (2 * t.subtree_size(c) > n) next = c;
    }
    if (next < 0) return v;
    v = next;
  }
}

// One distance query issued by the recursive release: the tree path from `a`
// down to `b`, answered once with Laplace noise.
struct TreeQuery {
  VertexId a;
  VertexId b;
  std::vector<EdgeId> path_edges;
  int level;
  double noisy_value;
};

struct TreeRelease {
  VertexId root = 0;
  int n = 0;
  double noise_scale = 0.0;
  // d(v, T): released distance from the root, and how many noisy query
  // answers were added to form it.
  std::vector<double> distance;
  std::vector<int> summand_count;
  std::vector<TreeQuery> query_set;
};

namespace tree_internal {

class SingleSourceReleaser {
 public:
  SingleSourceReleaser(const RootedTree& t, const WeightFunction& w,
                       double scale, NoiseSource& src)
      : t_(t), w_(w), scale_(scale), src_(src),
        stamp_(static_cast<std::size_t>(t.size()), -1),
        local_size_(static_cast<std::size_t>(t.size()), 0) {}

  void Run(TreeRelease& out) {
    out_ = &out;
    out.distance.assign(static_cast<std::size_t>(t_.size()), 0.0);
    out.summand_count.assign(static_cast<std::size_t>(t_.size()), 0);
    Release(t_.root(), t_.bfs_order(), 0);
  }

 private:
  // `piece` lists the vertices of the current subtree in BFS order (parents
  // first); `root` is piece[0].
  void Release(VertexId root, const std::vector<VertexId>& piece, int level) {
    const int m = static_cast<int>(piece.size());
    if (m == 1) {
      out_->distance[Idx(root)] = 0.0;
      out_->summand_count[Idx(root)] = 0;
      return;
    }
    const int stamp = next_stamp_++;
    for (VertexId v : piece) {
      stamp_[Idx(v)] = stamp;
      local_size_[Idx(v)] = 1;
    }
    for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
      if (*it == root) continue;
      local_size_[Idx(t_.parent(*it))] += local_size_[Idx(*it)];
    }
    auto in_piece = [&](VertexId v) { return stamp_[Idx(v)] == stamp; };

    VertexId splitter = root;
    for (;;) {
      VertexId next = -1;
      for (VertexId c : t_.children(splitter)) {
        if (in_piece(c) && 2 * local_size_[Idx(c)] > m) next = c;
      }
      if (next < 0) break;
      splitter = next;
    }

    // Noisy d(root, splitter). Skipped when they coincide: the distance is 0
    // by definition and needs no query.
    double splitter_estimate = 0.0;
    int splitter_summands = 0;
    if (splitter != root) {
      std::vector<EdgeId> edges;
      for (VertexId v = splitter; v != root; v = t_.parent(v)) {
        edges.push_back(t_.parent_edge(v));
      }
      std::reverse(edges.begin(), edges.end());
      const double exact = w_.Total(edges);
      splitter_estimate = exact + src_.Laplace(scale_);
      splitter_summands = 1;
      out_->query_set.push_back(
          {root, splitter, std::move(edges), level, splitter_estimate});
    }

    struct ChildPiece {
      VertexId child;
      double estimate;
      int summands;
      std::vector<VertexId> vertices;
    };
    std::vector<ChildPiece> child_pieces;
    for (VertexId c : t_.children(splitter)) {
      if (!in_piece(c)) continue;
      const EdgeId e = t_.parent_edge(c);
      const double estimate = splitter_estimate + w_[e] + src_.Laplace(scale_);
      out_->query_set.push_back({splitter, c, {e}, level, estimate});
      child_pieces.push_back({c, estimate, splitter_summands + 1, {}});
    }

    // Children subtrees in BFS order, and the remainder rooted at `root`.
    const int remainder_stamp = next_stamp_++;
    for (ChildPiece& cp : child_pieces) {
      cp.vertices.push_back(cp.child);
      for (std::size_t i = 0; i < cp.vertices.size(); ++i) {
        for (VertexId gc : t_.children(cp.vertices[i])) {
          if (in_piece(gc)) cp.vertices.push_back(gc);
        }
      }
      for (VertexId v : cp.vertices) stamp_[Idx(v)] = remainder_stamp;
    }
    std::vector<VertexId> remainder;
    for (VertexId v : piece) {
      if (stamp_[Idx(v)] == stamp) remainder.push_back(v);
    }

    CheckPartition(m, remainder.size(), child_pieces);

    Release(root, remainder, level + 1);
    for (ChildPiece& cp : child_pieces) {
      Release(cp.child, cp.vertices, level + 1);
      for (VertexId v : cp.vertices) {
        out_->distance[Idx(v)] = cp.estimate + out_->distance[Idx(v)];
        out_->summand_count[Idx(v)] += cp.summands;
      }
    }
  }

  // Child pieces hold at most m/2 vertices. The remainder keeps the splitter
  // and can reach ceil(m/2) (a 3-vertex path rooted at an end), which still
  // bounds the depth by ceil(log2 n).
  template <typename Pieces>
  static void CheckPartition(int m, std::size_t remainder,
                             const Pieces& child_pieces) {
    std::size_t total = remainder;
    bool ok = 2 * remainder <= static_cast<std::size_t>(m) + 1;
    for (const auto& cp : child_pieces) {
      total += cp.vertices.size();
      ok = ok && 2 * cp.vertices.size() <= static_cast<std::size_t>(m);
    }
    if (!ok || total != static_cast<std::size_t>(m)) {
      throw std::logic_error("tree decomposition violated the half-size bound");
    }
  }

  static std::size_t Idx(VertexId v) { return static_cast<std::size_t>(v); }

  const RootedTree& t_;
  const WeightFunction& w_;
  double scale_;
  NoiseSource& src_;
  TreeRelease* out_ = nullptr;
  std::vector<int> stamp_;
  std::vector<int> local_size_;
  int next_stamp_ = 0;
};

}  // namespace tree_internal

// Recursive splitter release of distances from the root. Every query answer
// gets Lap(ceil(log2 n) / eps) noise where n is the size of the whole tree;
// each recursion level touches every edge at most once, so the full release
// has sensitivity at most ceil(log2 n).
inline TreeRelease ReleaseSingleSource(const WeightedGraph& g,
                                       const RootedTree& t,
                                       const WeightFunction& w, double eps,
                                       NoiseSource& src) {
  if (!(eps > 0.0)) throw InvalidArgument("epsilon must be positive");
  CheckNonnegative(g, w);
  if (t.size() != g.vertex_count()) {
    throw InvalidArgument("rooted tree does not match the graph");
  }
  TreeRelease out;
  out.root = t.root();
  out.n = t.size();
  const int log_n = CeilLog2(out.n);
  out.noise_scale = static_cast<double>(log_n) / eps;
  if (out.n == 1) {
    out.distance = {0.0};
    out.summand_count = {0};
    return out;
  }
  tree_internal::SingleSourceReleaser(t, w, out.noise_scale, src).Run(out);
  return out;
}

// d(x, y) = d(root, x) + d(root, y) - 2 d(root, lca(x, y)); post-processing.
inline double AllPairsQuery(const TreeRelease& rel, const RootedTree& t,
                            VertexId x, VertexId y) {
  const VertexId z = t.LowestCommonAncestor(x, y);
  const auto& d = rel.distance;
  return d.at(static_cast<std::size_t>(x)) + d.at(static_cast<std::size_t>(y)) -
         2.0 * d.at(static_cast<std::size_t>(z));
}

// Concentration bound for a single released root distance: at most
// 2 ceil(log2 n) summands of scale ceil(log2 n)/eps.
inline double SingleSourceErrorBound(std::int64_t n, double eps, double gamma) {
  if (!(eps > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("gamma must lie in (0, 1)");
  }
  const double log_n = CeilLog2(n);
  return 4.0 * (log_n / eps) * std::sqrt(2.0 * log_n) * std::log(2.0 / gamma);
}

}  // namespace privgraph

#endif  // PRIVGRAPH_TREE_DISTANCES_HPP_
