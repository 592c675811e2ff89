#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gulf/cover.hpp"
#include "gulf/params.hpp"

namespace gulf {

class TransformError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Output of a transform: a verified cover plus the bound it was checked
// against (layers for union covers, guests for global ones, locality for
// local ones).
struct TransformResult {
  Cover cover;
  int bound = 0;
  std::string bound_text;
};

// A subgraph of some host, given with its embedding.
struct Subgraph {
  Graph graph;
  VertexMap embedding;
};

// Replaces every layer of a union cover by a global cover of the layer graph.
// member_covers are covers of layer graphs (matched up to isomorphism); when
// empty, each layer keeps its own guests.
TransformResult union_to_global_compose(const Cover &union_cover, const GuestClass &cls,
                                        const std::vector<Cover> &member_covers = {});

// Injective s-local cover to a union cover with at most (w+1)s layers, by
// colouring the intersection graph of guest subtrees.
TransformResult local_to_union_via_treewidth(const Cover &local_cover, const GuestClass &cls,
                                             const TreeDecomposition &td);

// Folded s-local cover of a bipartite host to an injective union cover with at
// most s^2 layers.
TransformResult folded_to_union_bipartite(const Cover &folded_cover, const GuestClass &cls);

// At most C(chi,2) induced bipartite subgraphs covering every edge.
std::vector<Subgraph> decompose_induced_bipartite(const Graph &host);
// Exactly ceil(log2 chi) bipartite subgraphs covering every edge.
std::vector<Subgraph> decompose_bipartite_log(const Graph &host);

// At most floor(2d) weak induced star forests covering every edge; requires
// mad(host) <= d.
std::vector<Subgraph> star_forest_decomposition(const Graph &host, const Rational &d);

// Folded s-local cover of a star forest to an injective cover of locality at
// most s whose guests are stars (one preimage edge kept per host edge).
TransformResult folded_to_local_star(const Cover &folded_cover, const GuestClass &cls);

// Folded s-local cover to a union cover with at most 2 mad(H) s <= 2 d s^2
// layers, d the class mad bound.
TransformResult folded_to_union_sparse(const Cover &folded_cover, const GuestClass &cls);

// Folded s-local cover to a union cover with at most ceil(log chi) s^2 layers
// (monotone classes) or C(chi,2) s^2 layers (hereditary classes).
TransformResult folded_to_union_chromatic(const Cover &folded_cover, const GuestClass &cls);

} // namespace gulf
