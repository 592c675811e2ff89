#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gulf/graph.hpp"
#include "gulf/isomorphism.hpp"
#include "gulf/rational.hpp"

namespace gulf {

struct ClassFlags {
  bool hereditary = false;
  bool monotone = false;
  bool component_closed = false;
  bool union_closed = false;
};

struct ClassBounds {
  std::optional<Rational> mad_bound;
  std::optional<int> chi_bound;
  std::string justification;
};

// A guest graph placed injectively in a host.
struct Candidate {
  Graph guest;
  VertexMap map;
};

class EnumerationLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GuestClass {
  enum class Kind { finite_list, named };

  std::string name;
  Kind kind = Kind::named;
  ClassFlags flags;
  ClassBounds bounds;
  std::string description;

  std::vector<Graph> members;                        // finite lists
  std::function<bool(const Graph &)> predicate;      // named classes
  std::function<bool(const Graph &)> union_predicate; // optional override of the closure test
  // Candidate guests (injective copies) in a host; empty function if the class
  // has no enumerator. Candidates are edge-carrying and distinct as images.
  std::function<std::vector<Candidate>(const Graph &)> enumerator;
  // For split search: can this connected graph still grow into a member?
  std::function<bool(const Graph &)> extendable;
  // Every folded cover can be made injective without raising locality (each
  // member component is a clique, or a star whose smaller stars are members).
  bool folds_to_injective = false;

  bool has_enumerator() const { return static_cast<bool>(enumerator); }
};

bool membership(const GuestClass &c, const Graph &g);
bool union_closure_membership(const GuestClass &c, const Graph &g);
bool could_extend(const GuestClass &c, const Graph &connected_part);

// Built-in names plus any finite lists found under class_dir (one
// subdirectory per class, each with a manifest.json).
std::vector<std::string> registered_names(const std::string &class_dir = {});
// Throws std::invalid_argument for unknown names.
GuestClass registry_lookup(const std::string &name, const std::string &class_dir = {});

// Finite list with flags inferred by closure checks on the members.
GuestClass make_finite_class(const std::string &name, std::vector<Graph> graphs);
// Loads a directory holding manifest.json and graph6 files; validates the
// declared flags and bounds against the members.
GuestClass load_finite_class(const std::string &dir);
// Writes a finite class directory readable by load_finite_class.
void save_finite_class(const GuestClass &c, const std::string &dir);

// Empty when consistent; otherwise the first problem found.
std::string validate_class(const GuestClass &c);

// Default cap on enumerated candidates before EnumerationLimit is thrown.
inline constexpr std::size_t candidate_limit = 200000;

} // namespace gulf
