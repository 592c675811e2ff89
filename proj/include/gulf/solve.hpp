#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gulf/cover.hpp"
#include "gulf/graph.hpp"
#include "gulf/guest_class.hpp"

namespace gulf {

enum class Variant { global, union_, local, folded };

const char *variant_name(Variant v);
// Accepts "global", "union", "local", "folded".
std::optional<Variant> parse_variant(const std::string &s);

struct SolveBudget {
  std::uint64_t node_limit = 10'000'000;
  double time_limit = 60.0; // seconds
  // Max copies of a host vertex in folded search; 0 means "the current s".
  int multiplicity_cap = 0;
  // Folded split search: allow several guest edges over one host edge. Unset
  // means off for monotone classes (single assignment is WLOG there) and on
  // otherwise.
  std::optional<bool> edge_repetition;
};

class UnsupportedClass : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SolveResult {
  bool decided = false;
  int value = 0;           // when decided
  int lower = 0;           // proven bounds, also when undecided
  std::optional<int> upper;
  std::optional<Cover> certificate; // attains `upper`
  std::string lower_bound_proof;
  std::string method;
  std::uint64_t nodes = 0;
  double seconds = 0;
  // Settings that the folded search ran under.
  int multiplicity_cap = 0;
  bool edge_repetition = false;
};

// Exact covering number by iterative deepening on the objective. Budget
// exhaustion gives an undecided result carrying the proven bounds. Throws
// UnsupportedClass when no engine applies.
SolveResult solve(const Graph &host, const GuestClass &cls, Variant variant, const SolveBudget &budget = {});

struct ChainReport {
  SolveResult global, union_, local, folded;
  bool holds = true; // over every decided pair
  std::vector<std::string> violations;
};
ChainReport chain_check(const Graph &host, const GuestClass &cls, const SolveBudget &budget = {});

struct UniqueCopiesTrace {
  struct Guest {
    std::size_t core_copies = 0;  // copies of the core (guest minus pendant leaves)
    std::vector<int> core_image;  // host vertices of the unique core copy
    int pendant_demand = 0;       // leaves the guest hangs on its core
    // Host vertex and pendant edges at it that only this guest (or K2) can
    // cover: either the guest is used or |pendant_edges| K2s share the vertex.
    int pendant_vertex = -1;
    std::vector<int> pendant_edges;
  };
  std::vector<Guest> guests;
  // witnesses[i][j]: a host vertex shared by the core copies of guests i and j
  std::vector<std::vector<int>> witnesses;
};

struct UniqueCopiesResult {
  bool certified = false;
  int bound = 0;
  std::string refusal; // why the hypothesis failed
  UniqueCopiesTrace trace;
};

// Lower bound |special| on the union covering number for classes whose only
// members fitting in the host are K2 and the special guests.
UniqueCopiesResult lower_bound_unique_copies(const Graph &host, const std::vector<Graph> &special);

} // namespace gulf
