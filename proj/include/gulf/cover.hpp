#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gulf/graph.hpp"
#include "gulf/guest_class.hpp"
#include "gulf/isomorphism.hpp"

namespace gulf {

struct CoverGuest {
  Graph graph;
  VertexMap map; // guest vertex -> host vertex
};

struct CoverClaims {
  std::string class_name;
  bool injective = true;
  int locality = 0;
  int globality = 0;
  std::optional<std::vector<std::vector<int>>> layers;
};

struct Cover {
  Graph host;
  std::vector<CoverGuest> guests;
  CoverClaims claims;
};

struct CoverReport {
  bool valid = false;
  int achieved_locality = 0;
  int achieved_globality = 0;
  bool injective = true;
  std::vector<bool> member; // per guest
  std::vector<std::string> diagnostics;
  std::string first_violation() const { return diagnostics.empty() ? std::string{} : diagnostics.front(); }
};

// Checks every structural invariant and every claim; never throws on bad
// certificates.
CoverReport verify_cover(const Cover &c, const GuestClass &cls);

// Measured values, independent of the claims.
int measured_locality(const Cover &c);
int measured_globality(const Cover &c);
bool measured_injective(const Cover &c);

// Sets the claims to the measured values (class name and layers as given).
Cover finalize_cover(Graph host, std::vector<CoverGuest> guests, const std::string &class_name,
                     std::optional<std::vector<std::vector<int>>> layers = std::nullopt);

// Builds a cover whose guests are the given candidates and whose layers (if
// any) list candidate indices.
Cover cover_from_candidates(const Graph &host, const std::vector<Candidate> &chosen, const std::string &class_name,
                            std::optional<std::vector<std::vector<int>>> layers = std::nullopt);

enum class RestrictMode { subgraph, induced, weak_induced };

class RestrictError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Restriction of a cover to a subgraph `sub` placed in the host by
// `embedding`. Guests are cut to the preimage of each component of sub;
// edgeless pieces and isolated guest vertices are dropped. weak_induced mode
// keeps the pieces of one original guest as separate guests sharing a layer.
Cover restrict_cover(const Cover &c, const GuestClass &cls, const Graph &sub, const VertexMap &embedding,
                     RestrictMode mode);

} // namespace gulf
