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


#ifndef PRIVGRAPH_GENERATORS_HPP_
#define PRIVGRAPH_GENERATORS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "privgraph/errors.hpp"
#include "privgraph/graph.hpp"

namespace privgraph {

// side x side grid; vertex (i, j) has id i * side + j. Horizontal edges come
// first in row-major order, then vertical ones.
inline WeightedGraph MakeGrid(int side) {
  if (side < 1) throw InvalidArgument("grid side must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j + 1 < side; ++j) {
      edges.emplace_back(i * side + j, i * side + j + 1);
    }
  }
  for (int i = 0; i + 1 < side; ++i) {
    for (int j = 0; j < side; ++j) {
      edges.emplace_back(i * side + j, (i + 1) * side + j);
    }
  }
  return WeightedGraph(side * side, edges);
}

// Exact integer square root, or -1 when n is not a perfect square.
inline int PerfectSquareRoot(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? static_cast<int>(r) : -1;
}

inline WeightedGraph MakeGridWithVertexCount(std::int64_t vertex_count) {
  const int side = PerfectSquareRoot(vertex_count);
  if (side < 1) {
    throw InvalidArgument("grid needs a perfect-square vertex count, got " +
                          std::to_string(vertex_count));
  }
  return MakeGrid(side);
}

// 0 - 1 - ... - (V-1), edge i joining i and i+1.
inline WeightedGraph MakePath(int vertex_count) {
  if (vertex_count < 1) throw InvalidArgument("path needs V >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < vertex_count; ++i) edges.emplace_back(i, i + 1);
  return WeightedGraph(vertex_count, edges);
}

// Uniform random recursive tree: vertex i attaches to a uniform earlier vertex.
inline WeightedGraph MakeRandomTree(int vertex_count, std::mt19937_64& rng) {
  if (vertex_count < 1) throw InvalidArgument("tree needs V >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i < vertex_count; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(pick(rng), i);
  }
  return WeightedGraph(vertex_count, edges);
}

// Connected G(n, p): a random spanning tree plus each remaining vertex pair
// independently with probability p.
inline WeightedGraph MakeRandomConnected(int vertex_count, double p,
                                         std::mt19937_64& rng) {
  if (vertex_count < 1) throw InvalidArgument("graph needs V >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<bool>> present(
      static_cast<std::size_t>(vertex_count),
      std::vector<bool>(static_cast<std::size_t>(vertex_count), false));
  for (int i = 1; i < vertex_count; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int j = pick(rng);
    edges.emplace_back(j, i);
    present[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    present[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < vertex_count; ++i) {
    for (int j = i + 1; j < vertex_count; ++j) {
      if (!present[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          coin(rng)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return WeightedGraph(vertex_count, edges);
}

// Complete bipartite K_{n,n}; left vertices 0..n-1, right n..2n-1.
inline WeightedGraph MakeCompleteBipartite(int n) {
  if (n < 1) throw InvalidArgument("bipartite side must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) edges.emplace_back(i, n + j);
  }
  return WeightedGraph(2 * n, edges);
}

// Weights drawn uniformly from {0, 1/8, ..., lambda}. Multiples of 1/8 with
// small numerators add exactly in double precision, so any two summation
// orders of the same edges agree bit for bit.
inline WeightFunction DyadicWeights(const WeightedGraph& g, double lambda,
                                    std::mt19937_64& rng) {
  const auto steps = static_cast<int>(std::floor(lambda * 8.0));
  std::uniform_int_distribution<int> pick(0, std::max(0, steps));
  std::vector<double> w(static_cast<std::size_t>(g.edge_count()));
  for (double& x : w) x = pick(rng) / 8.0;
  return WeightFunction(std::move(w));
}

inline WeightFunction UniformWeights(const WeightedGraph& g, double lo,
                                     double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pick(lo, hi);
  std::vector<double> w(static_cast<std::size_t>(g.edge_count()));
  for (double& x : w) x = pick(rng);
  return WeightFunction(std::move(w));
}

}  // namespace privgraph

#endif  // PRIVGRAPH_GENERATORS_HPP_
