#include "cnr/graph6.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cnr {

namespace {

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw ParseError("graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

Graph parse_graph6(std::string_view s) {
  // Tolerate a trailing newline so raw file lines parse as-is.
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
  if (s.empty()) fail(0, "empty input");
  const int n = static_cast<int>(s[0]) - 63;
  if (n < 1 || n > Graph::kMaxOrder) fail(0, "unsupported order byte");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != 1 + nbytes)
    fail(s.size() < 1 + nbytes ? s.size() : 1 + nbytes, "wrong length");
  std::vector<std::pair<int, int>> edges;
  std::size_t bi = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bi) {
      const std::size_t byte = 1 + bi / 6;
      const unsigned c = static_cast<unsigned char>(s[byte]);
      if (c < 63 || c > 126) fail(byte, "byte outside printable range");
      if ((c - 63) >> (5 - bi % 6) & 1) edges.emplace_back(row, col);
    }
  }
  // Padding bits must be zero.
  for (; bi < nbytes * 6; ++bi) {
    const std::size_t byte = 1 + bi / 6;
    const unsigned c = static_cast<unsigned char>(s[byte]);
    if (c < 63 || c > 126) fail(byte, "byte outside printable range");
    if ((c - 63) >> (5 - bi % 6) & 1) fail(byte, "nonzero padding");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  unsigned acc = 0;
  int nacc = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = acc << 1 | (g.adjacent(row, col) ? 1u : 0u);
      if (++nacc == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nacc = 0;
      }
    }
  }
  if (nacc) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string tag;
  if (!(in >> tag) || tag != "n")
    throw ParseError("edge list: expected leading 'n' at byte 0");
  int n;
  if (!(in >> n)) throw ParseError("edge list: missing order");
  if (n < 1 || n > Graph::kMaxOrder)
    throw ParseError("edge list: order out of range");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: vertex id out of range");
    if (u == v) throw ParseError("edge list: self-loop");
    edges.emplace_back(u, v);
  }
  if (!in.eof()) {
    in.clear();
    std::string junk;
    in >> junk;
    throw ParseError("edge list: unexpected token '" + junk + "'");
  }
  return Graph(n, edges);
}

namespace {

// Depth-first search for the vertex ordering whose column-major upper
// triangle is lexicographically least. Column j under a partial ordering
// depends only on the first j placed vertices, which allows prefix pruning.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> perm;              // perm[pos] = original vertex
  std::vector<std::uint64_t> cur;     // cur[pos] = column bits, row 0 as MSB
  std::vector<std::uint64_t> best;
  bool have_best = false;
  std::uint64_t used = 0;

  explicit CanonSearch(const Graph& gr)
      : g(gr), n(gr.order()), perm(n), cur(n), best(n) {}

  void run(int pos, bool strictly_less) {
    if (pos == n) {
      // best can change while an ancestor's strictly_less flag is in
      // flight, so re-check before overwriting.
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      std::uint64_t col = 0;
      for (int row = 0; row < pos; ++row)
        col = col << 1 | (g.adjacent(perm[row], v) ? 1u : 0u);
      bool less = strictly_less;
      if (!less && have_best) {
        if (col > best[pos]) continue;
        if (col < best[pos]) less = true;
      }
      perm[pos] = v;
      cur[pos] = col;
      used |= bit(v);
      run(pos + 1, less);
      used &= ~bit(v);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n == 1) return emit_graph6(g);
  CanonSearch cs(g);
  cs.run(0, false);
  std::vector<std::pair<int, int>> edges;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (cs.best[col] >> (col - 1 - row) & 1) edges.emplace_back(row, col);
  return emit_graph6(Graph(n, edges));
}

}  // namespace cnr
