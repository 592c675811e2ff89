#pragma once

#include <string>

#include "gulf/cover.hpp"

namespace gulf {

// Certificate JSON, fields in fixed order:
// {"host": g6, "class": name, "guests": [{"graph": g6, "map": [...]}, ...],
//  "claims": {"injective": b, "locality": s, "globality": t, "layers": [[...]] | null}}
std::string cover_to_json(const Cover &c, int indent = 2);
// Throws ParseError on malformed documents.
Cover cover_from_json(const std::string &text);

} // namespace gulf
