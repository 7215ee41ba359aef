#pragma once

#include <string>

#include "qb/quiver/quiver.hpp"

namespace qb {

/// JSON quiver specification. Schema: see docs/spec_format.md.
QuiverModel parse_quiver_spec(const std::string& text);
QuiverModel load_quiver_spec(const std::string& path);
/// Canonical serialization; parse(write(q)) == q and write(parse(s)) == s for canonical s.
std::string write_quiver_spec(const QuiverModel& q);

}  // namespace qb
