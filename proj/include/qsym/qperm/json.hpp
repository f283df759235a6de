#pragma once

#include "qsym/numerics/json.hpp"
#include "qsym/qperm/index_set.hpp"
#include "qsym/qperm/partial.hpp"
#include "qsym/qperm/quantum_permutation.hpp"

namespace qsym {

// {"kind":"finite","n":4} or {"kind":"naturals"}, optional "labels".
[[nodiscard]] json index_set_to_json(const IndexSet& s);
[[nodiscard]] IndexSet index_set_from_json(const json& j);

// {"index_set":..., "dim":d, "support":[ids], "entries":{"x,y": matrix}}.
// Entries equal to the tail value δ_xy·1 are omitted on output and assumed
// when missing on input.
[[nodiscard]] json qperm_to_json(const QuantumPermutation& qp);
// Throws ParseError on malformed input.
[[nodiscard]] QuantumPermutation qperm_from_json(const json& j);

void to_json(json& j, const ValidationReport& r);
void to_json(json& j, const PartialReport& r);

// Domain, range, window and the defined entries as sparse projections.
[[nodiscard]] json partial_to_json(const PartialQuantumPermutation& p);

}  // namespace qsym
