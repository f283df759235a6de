#pragma once

#include "qsym/numerics/json.hpp"
#include "qsym/reptheory/decompose.hpp"
#include "qsym/reptheory/intertwiner.hpp"
#include "qsym/reptheory/line_audit.hpp"

namespace qsym {

void to_json(json& j, const IntertwinerBasis& b);
void to_json(json& j, const AuditStep& s);
void to_json(json& j, const LineAuditReport& r);

// [{"irreducible": qperm, "dim": k, "multiplicity": m}, ...]
[[nodiscard]] json components_to_json(const std::vector<Component>& comps);

// {"radius": r, "dim": d, "entries": {"i,j": matrix}} with signed i, j.
// Throws ParseError on malformed input.
[[nodiscard]] LineWindow line_window_from_json(const json& j);
[[nodiscard]] json line_window_to_json(const LineWindow& w);

}  // namespace qsym
