#pragma once

#include <vector>

#include "gulf/cover.hpp"
#include "gulf/graph.hpp"

namespace gulf {

class ConstructionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Path p_0..p_{2t} (vertices 0..2t), t leaves at p_0, t leaves at p_{2t} and
// one leaf at p_i. 4t+2 vertices.
Graph tw_hat_guest(int t, int i);
// t-1 disjoint copies of tw_hat_guest(t, i).
Graph tw_guest(int t, int i);

struct TwFamily {
  int t = 0;
  std::vector<Graph> hat_guests; // index i-1
  std::vector<Graph> guests;     // index i-1
  Graph host;                    // disjoint union of H_{i,j}, i<j, in lexicographic order
  Cover cover;                   // 2-local, t guests
};
TwFamily build_tw_family(int t);

// Path v_0..v_{l+1} (vertices 0..l+1), a triangle through v_0, a cycle of
// length 2l+1 through v_{l+1}, and l leaves at v_i. 4l+4 vertices.
Graph grid_guest(int l, int i);

struct GridFamily {
  int l = 0;
  std::vector<Graph> guests; // index i-1
  Graph host;                // grid vertices labelled "(i,j)"
  Cover cover;               // 2-local, l guests
};
GridFamily build_grid_family(int l);

// Host K_{1,n}; one hairy-cycle guest folded onto the star (K2 when n = 1).
Cover build_hairy_star_cover(int n);

DiGraph complete_digraph(int n);
// Vertices are the arcs of d in sorted order, labelled "u>v"; arcs uv and xy
// are adjacent when v == x or y == u.
Graph shift_graph(const DiGraph &d);
// One complete bipartite guest (in-arcs vs out-arcs) per vertex of d.
Cover shift_bipartite_local_cover(const DiGraph &d);

// Single guest: the bipartite double cover of h, folded onto h.
Cover bipartite_double_folded_cover(const Graph &h);

} // namespace gulf
