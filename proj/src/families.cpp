#include "cnr/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cnr/solvers.hpp"

namespace cnr {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require(bool ok, const std::string& what) {
  if (!ok)
    throw std::runtime_error("family validator failed: " + what);
}

}  // namespace

Graph path(int n) {
  if (n < 1) bad("path: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) bad("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  if (n < 1) bad("complete: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph empty_graph(int n) {
  if (n < 1) bad("empty: n >= 1 required");
  return Graph(n, {});
}

Graph star(int n) {
  if (n < 1) bad("star: n >= 1 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, n - 1);
  return Graph(n, e);
}

Graph wheel(int n) {
  if (n < 4) bad("wheel: n >= 4 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n - 1; ++i) {
    e.emplace_back(i, (i + 1) % (n - 1));
    e.emplace_back(i, n - 1);
  }
  return Graph(n, e);
}

Graph fan(int n) {
  if (n < 4) bad("fan: n >= 4 required");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n - 1; ++i) {
    if (i + 1 < n - 1) e.emplace_back(i, i + 1);
    e.emplace_back(i, n - 1);
  }
  return Graph(n, e);
}

Graph gear(int l) {
  if (l < 2) bad("gear: l >= 2 required");
  const int n = 2 * l + 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 2 * l; ++i) e.emplace_back(i, (i + 1) % (2 * l));
  for (int i = 0; i < 2 * l; i += 2) e.emplace_back(i, n - 1);
  return Graph(n, e);
}

Graph accordion(int l) {
  if (l < 2) bad("accordion: l >= 2 required");
  const int n = 2 * l;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i < n - 1; i += 2) e.emplace_back(i, n - 1);
  return Graph(n, e);
}

Graph spider(const std::vector<int>& leg_lengths) {
  if (leg_lengths.empty()) bad("spider: at least one leg required");
  for (int len : leg_lengths)
    if (len < 1) bad("spider: leg lengths must be >= 1");
  int n = 1;
  for (int len : leg_lengths) n += len;
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(n, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  Graph g(10, e);
  for (int v = 0; v < 10; ++v) require(g.degree(v) == 3, "petersen: 3-regular");
  require(girth(g) == std::optional<int>(5), "petersen: girth 5");
  for (int u = 0; u < 10; ++u) {
    const auto d = distances(g, bit(u));
    for (int v = 0; v < 10; ++v) {
      require(d[v] <= ExtNat(2), "petersen: diameter 2");
      if (v <= u) continue;
      const int common = popcount(g.neighbors(u) & g.neighbors(v));
      if (g.adjacent(u, v))
        require(common == 0, "petersen: adjacent pairs share 0 neighbors");
      else
        require(common == 1, "petersen: non-adjacent pairs share 1 neighbor");
    }
  }
  return g;
}

Graph h_graph(int n) {
  if (n < 7) bad("h_graph: n >= 7 required");
  // 7-vertex head (labels are the source's 1-indexed ones minus 1), tail
  // path appended at vertex 6.
  std::vector<std::pair<int, int>> e = {
      {0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
      {2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}};
  for (int v = 7; v < n; ++v) e.emplace_back(v - 1, v);
  Graph g(n, e);
  // Structural facts every correct transcription must satisfy.
  require((g.closed_neighborhood(3) & 0b0110110) == 0b0110110,
          "h_graph: vertex 3 dominates {1,2,4,5}");
  if (n <= 8)
    require(closed_neighborhood(g, bit(0) | bit(6)) == g.all_vertices(),
            "h_graph: {0,6} dominates the order-7/8 graph");
  require(g.adjacent(2, 1) && g.adjacent(1, 3) && g.adjacent(3, 6),
          "h_graph: walk 2,1,3,6,... exists");
  for (int v = 7; v < n; ++v)
    require(g.adjacent(v - 1, v), "h_graph: tail path");
  require(capture_time(g, 1) == ExtNat(static_cast<std::uint64_t>(n - 4)),
          "h_graph: single-cop capture time is n-4");
  return g;
}

Graph gap3_graph() {
  const std::vector<std::pair<int, int>> e = {
      {0, 1}, {0, 2},  {1, 3},  {2, 3},   {3, 4},   {3, 5},
      {4, 6}, {5, 7},  {6, 8},  {7, 9},   {8, 10},  {9, 10},
      {10, 11}, {10, 12}, {11, 13}, {12, 13}};
  Graph g(14, e);
  std::uint64_t dom = bit(0) | bit(3) | bit(8) | bit(9) | bit(13);
  require(closed_neighborhood(g, dom) == g.all_vertices(),
          "gap3: {0,3,8,9,13} dominates");
  require(g.closed_neighborhood(0) == (bit(0) | bit(1) | bit(2)),
          "gap3: N[0]");
  require(g.closed_neighborhood(6) == (bit(4) | bit(6) | bit(8)),
          "gap3: N[6]");
  require(g.closed_neighborhood(7) == (bit(5) | bit(7) | bit(9)),
          "gap3: N[7]");
  require(g.closed_neighborhood(13) == (bit(11) | bit(12) | bit(13)),
          "gap3: N[13]");
  for (int v : {0, 1, 2, 4, 6, 8, 5, 7, 9, 11, 12, 13})
    require(g.degree(v) == 2, "gap3: listed vertices have degree 2");
  require(k_radius(g, 1) == ExtNat(4), "gap3: radius 4");
  require(!is_dismantlable(g), "gap3: not dismantlable");
  return g;
}

Graph cop2_safe_vertex_family(const Graph& h, int p, int q) {
  if (p < 0 || q < 0) bad("cop2_safe_vertex_family: p, q >= 0 required");
  const int hn = h.order();
  const int n = 4 + hn + p + q;
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (auto [u, v] : h.edges()) e.emplace_back(4 + u, 4 + v);
  for (int i = 0; i < hn; ++i) e.emplace_back(0, 4 + i);
  for (int i = 0; i < p; ++i) e.emplace_back(1, 4 + hn + i);
  for (int i = 0; i < q; ++i) e.emplace_back(3, 4 + hn + p + i);
  return Graph(n, e);
}

Graph make_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        args.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        bad("family spec: bad integer argument '" + tok + "'");
      }
    }
  }
  auto one_arg = [&]() {
    if (args.size() != 1) bad("family '" + name + "': one argument expected");
    return args[0];
  };
  if (name == "path") return path(one_arg());
  if (name == "cycle") return cycle(one_arg());
  if (name == "complete") return complete(one_arg());
  if (name == "empty") return empty_graph(one_arg());
  if (name == "star") return star(one_arg());
  if (name == "wheel") return wheel(one_arg());
  if (name == "fan") return fan(one_arg());
  if (name == "gear") return gear(one_arg());
  if (name == "accordion") return accordion(one_arg());
  if (name == "hn") return h_graph(one_arg());
  if (name == "spider") return spider(args);
  if (name == "petersen") {
    if (!args.empty()) bad("family 'petersen': no arguments expected");
    return petersen();
  }
  if (name == "gap3") {
    if (!args.empty()) bad("family 'gap3': no arguments expected");
    return gap3_graph();
  }
  bad("unknown family '" + name + "'");
}

}  // namespace cnr
