#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gulf/graph.hpp"

namespace gulf {

enum class CopyMode { subgraph, induced };

using VertexMap = std::vector<int>;

// All injective maps pattern -> host preserving edges (and non-edges in
// induced mode), one per image (vertex set + edge set), i.e. modulo
// automorphisms of the pattern. Each representative is the lexicographically
// smallest image tuple of its class and the list is sorted. Enumeration stops
// after `limit` results.
std::vector<VertexMap> enumerate_copies(const Graph &pattern, const Graph &host, CopyMode mode,
                                        std::size_t limit = std::numeric_limits<std::size_t>::max());

bool has_copy(const Graph &pattern, const Graph &host, CopyMode mode = CopyMode::subgraph);

// Image vertex set / edge ids of an injective map, both sorted.
std::vector<int> image_vertices(const VertexMap &map);
std::vector<int> image_edges(const Graph &pattern, const Graph &host, const VertexMap &map);

std::optional<VertexMap> find_isomorphism(const Graph &a, const Graph &b);
bool are_isomorphic(const Graph &a, const Graph &b);

// Isomorphism-invariant hash from colour refinement; equal graphs up to
// isomorphism always hash equal.
std::uint64_t invariant_hash(const Graph &g);

// Throws GraphError when the embedding is not an edge-preserving injection.
bool is_weak_induced_subgraph(const Graph &sub, const Graph &host, const VertexMap &embedding);

bool is_homomorphism(const Graph &from, const Graph &to, const VertexMap &map);

} // namespace gulf
