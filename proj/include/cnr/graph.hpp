#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cnr/bits.hpp"
#include "cnr/extnat.hpp"

namespace cnr {

/// Immutable simple undirected graph on vertices 0..n-1, adjacency kept as
/// per-vertex bitmasks. Loop-free by construction; the "stay" move of the
/// pursuit game lives in the move generator, not in the adjacency.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  std::uint64_t closed_neighborhood(int v) const { return adj_[v] | bit(v); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return popcount(adj_[v]); }
  int max_degree() const;
  int edge_count() const;
  std::uint64_t all_vertices() const { return (bit(n_ - 1) << 1) - 1; }
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> neighbor_list(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// N[s]: s together with every neighbor of a member of s.
std::uint64_t closed_neighborhood(const Graph& g, std::uint64_t s);

/// Multi-source shortest-path distances d(sources, v); infinity where
/// unreachable. Throws on an empty source set.
std::vector<ExtNat> distances(const Graph& g, std::uint64_t sources);

bool is_connected(const Graph& g);

/// True iff repeated deletion of corners (u with N[u] contained in N[v] for
/// some other v, closed neighborhoods) reduces g to a single vertex.
/// Disconnected graphs of order >= 2 are not dismantlable.
bool is_dismantlable(const Graph& g);

bool is_tree(const Graph& g);

/// Chordality via simplicial elimination.
bool is_chordal(const Graph& g);

/// Length of a shortest cycle; nullopt on forests.
std::optional<int> girth(const Graph& g);

}  // namespace cnr
