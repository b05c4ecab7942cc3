#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cnr/graph.hpp"

namespace cnr {

/// Malformed graph6 / edge-list input. what() names the byte offset.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Short-form graph6 (order <= 62): byte n+63, then the upper triangle in
/// column-major order, 6 bits per printable byte, zero-padded.
Graph parse_graph6(std::string_view s);
std::string emit_graph6(const Graph& g);

/// Whitespace-separated edge list: "n <order> <u1> <v1> <u2> <v2> ...".
Graph parse_edge_list(std::string_view s);

/// Lexicographically least graph6 string over all relabelings of g.
std::string canonical_form(const Graph& g);

}  // namespace cnr
