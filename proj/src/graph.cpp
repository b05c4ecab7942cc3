#include "cnr/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cnr {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("Graph: order must be in 1.." +
                                std::to_string(kMaxOrder));
  adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_count() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m += degree(v);
  return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) e.emplace_back(u, v);
  return e;
}

std::vector<int> Graph::neighbor_list(int v) const {
  std::vector<int> out;
  for_each_bit(adj_[v], [&](int u) { out.push_back(u); });
  return out;
}

std::uint64_t closed_neighborhood(const Graph& g, std::uint64_t s) {
  std::uint64_t r = s;
  for_each_bit(s, [&](int v) { r |= g.neighbors(v); });
  return r;
}

std::vector<ExtNat> distances(const Graph& g, std::uint64_t sources) {
  if (sources == 0) throw std::invalid_argument("distances: empty source set");
  if (sources & ~g.all_vertices())
    throw std::invalid_argument("distances: source out of range");
  std::vector<ExtNat> d(g.order(), ExtNat::infinity());
  std::uint64_t seen = sources;
  std::uint64_t frontier = sources;
  std::uint64_t level = 0;
  while (frontier) {
    for_each_bit(frontier, [&](int v) { d[v] = ExtNat(level); });
    std::uint64_t nxt = closed_neighborhood(g, frontier);
    frontier = nxt & ~seen;
    seen |= nxt;
    ++level;
  }
  return d;
}

bool is_connected(const Graph& g) {
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t nxt = closed_neighborhood(g, frontier);
    frontier = nxt & ~seen;
    seen |= nxt;
  }
  return seen == g.all_vertices();
}

bool is_dismantlable(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("is_dismantlable: empty graph");
  std::vector<std::uint64_t> cn(n);
  for (int v = 0; v < n; ++v) cn[v] = g.closed_neighborhood(v);
  std::uint64_t alive = g.all_vertices();
  while (popcount(alive) > 1) {
    int corner = -1;
    for_each_bit(alive, [&](int u) {
      if (corner >= 0) return;
      const std::uint64_t nu = cn[u] & alive;
      for_each_bit(alive, [&](int v) {
        if (corner >= 0 || v == u) return;
        if ((nu & ~(cn[v] & alive)) == 0) corner = u;
      });
    });
    if (corner < 0) return false;
    alive &= ~bit(corner);
  }
  return true;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::uint64_t alive = g.all_vertices();
  while (alive) {
    int simplicial = -1;
    for_each_bit(alive, [&](int v) {
      if (simplicial >= 0) return;
      const std::uint64_t nb = adj[v] & alive;
      bool clique = true;
      for_each_bit(nb, [&](int u) {
        if ((nb & ~bit(u) & ~adj[u]) != 0) clique = false;
      });
      if (clique) simplicial = v;
    });
    if (simplicial < 0) return false;
    alive &= ~bit(simplicial);
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  // BFS from every root; a non-tree edge at depths (du, dv) witnesses a
  // cycle of length du+dv+1 through the root when parents differ.
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue = {root};
    dist[root] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for_each_bit(g.neighbors(u), [&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u] && parent[v] != u) {
          const int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace cnr
