#pragma once

#include <string>
#include <vector>

#include "cnr/graph.hpp"

namespace cnr {

// Named constructors. Labeling conventions: hub / dominating vertex gets the
// last id; figure-derived graphs keep the source's 1-indexed labels shifted
// down by one.

Graph path(int n);
Graph cycle(int n);     // n >= 3
Graph complete(int n);
Graph empty_graph(int n);
Graph star(int n);      // hub = n-1
Graph wheel(int n);     // n >= 4, hub = n-1 on cycle 0..n-2
Graph fan(int n);       // n >= 4, hub = n-1 on path 0..n-2

/// Wheel W_{2l+1} with every other spoke removed: rim cycle 0..2l-1, hub 2l
/// adjacent to the even rim vertices. l >= 2.
Graph gear(int l);

/// Fan F_{2l} with every other spoke removed: path 0..2l-2, spine 2l-1
/// adjacent to the even path vertices (both path endpoints included). l >= 2.
Graph accordion(int l);

/// Center vertex 0 with one path of each given length attached.
Graph spider(const std::vector<int>& leg_lengths);

/// Standard Petersen graph: outer C_5 on 0..4, inner pentagram on 5..9
/// (i adjacent to 5+((i+2) mod 5)), spokes i-(i+5). Construction is
/// self-checked: 3-regular, girth 5, diameter 2, adjacent pairs share no
/// common neighbor, non-adjacent pairs share exactly one.
Graph petersen();

/// The 7-vertex head with a tail path attached: vertices 0..6 form the
/// head, 6-7-8-...-(n-1) is the tail. n >= 7. The constructor validates
/// the structural facts the head must satisfy (domination by {0,6} at
/// n = 7,8; vertex 3 dominating {1,2,4,5}; the cop walk 2,1,3,6,7,...;
/// single-cop capture time n-4) and refuses to return on any mismatch.
Graph h_graph(int n);

/// The 14-vertex graph whose cop and damage throttling differ by 3.
/// Validated against its known structure: {0,3,8,9,13} dominating,
/// N[0]={0,1,2}, N[6]={4,6,8}, N[7]={5,7,9}, N[13]={11,12,13} with those
/// twelve vertices of degree 2, radius 4, not dismantlable.
Graph gap3_graph();

/// C_4 with a distinguished vertex v joined to every vertex of h, plus p
/// leaves on one C_4-neighbor of v and q on the other. h may be a
/// default-constructed (order-0) graph, giving plain C_4 when p = q = 0.
/// Layout: C_4 = 0-1-2-3-0 with v = 0; h occupies 4..3+|h|; then the p
/// leaves of vertex 1, then the q leaves of vertex 3.
Graph cop2_safe_vertex_family(const Graph& h, int p, int q);

/// CLI-style family spec: "path:7", "gear:4", "accordion:5", "petersen",
/// "hn:12", "gap3", "spider:3,3,3", "empty:5", plus the other named
/// constructors ("cycle:6", "complete:4", "star:6", "wheel:5", "fan:5").
Graph make_family(const std::string& spec);

}  // namespace cnr
