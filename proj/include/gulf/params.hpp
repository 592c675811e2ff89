#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gulf/graph.hpp"
#include "gulf/rational.hpp"

namespace gulf {

struct TreeDecomposition {
  Graph tree;
  std::vector<std::vector<int>> bags; // indexed by tree node, sorted
  int width() const;
};

// Empty string when valid, otherwise the first violated condition.
std::string check_tree_decomposition(const Graph &g, const TreeDecomposition &td);

struct ChromaticResult {
  bool decided = false;
  int value = 0;      // chi when decided
  int lower = 0;      // proven bounds, meaningful either way
  int upper = 0;
  std::vector<int> coloring; // proper colouring with `upper` colours
  std::uint64_t nodes = 0;
};

ChromaticResult chromatic_number(const Graph &g, std::uint64_t node_limit = 10'000'000);
bool is_proper_coloring(const Graph &g, const std::vector<int> &coloring);

struct MadResult {
  Rational value;
  std::vector<int> witness; // vertex set attaining value
};
MadResult mad(const Graph &g);

struct TreewidthResult {
  bool exact = false;
  int width = 0;
  TreeDecomposition decomposition;
};
// Exact per component when the component has at most `exact_limit` vertices;
// otherwise the min-fill width, flagged inexact.
TreewidthResult treewidth(const Graph &g, int exact_limit = 25);
// Decomposition induced by an elimination order.
TreeDecomposition decomposition_from_order(const Graph &g, const std::vector<int> &order);

int arboricity_nash_williams(const Graph &g);

bool is_planar(const Graph &g);

struct StructuralFlags {
  bool is_forest = false;
  bool is_star = false;
  bool is_star_forest = false;
  bool is_bipartite = false;
  bool is_hairy_cycle = false;
  bool is_linear_forest = false;
  bool is_complete = false;
  bool is_complete_bipartite = false;
  std::vector<int> bipartition; // side 0/1 per vertex when bipartite
};
StructuralFlags structural_predicates(const Graph &g);

bool is_forest(const Graph &g);
bool is_star(const Graph &g);
bool is_star_forest(const Graph &g);
bool is_linear_forest(const Graph &g);
bool is_complete(const Graph &g);
bool is_complete_bipartite(const Graph &g);
bool is_hairy_cycle(const Graph &g);
// Side per vertex (0 for the smallest vertex of each component), or nullopt.
std::optional<std::vector<int>> bipartition(const Graph &g);
bool contains_c4(const Graph &g);

// Orientation as (tail, head) per edge id, or nullopt if some vertex would
// need outdegree above k.
std::optional<std::vector<std::pair<int, int>>> orientation_with_max_outdegree(const Graph &g, int k);

} // namespace gulf
