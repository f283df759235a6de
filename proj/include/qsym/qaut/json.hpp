#pragma once

#include "qsym/numerics/json.hpp"
#include "qsym/qaut/candidate.hpp"
#include "qsym/qaut/rado_certify.hpp"

namespace qsym {

// {"graph": spec, "scope": "finitary"|"window", ...qperm schema}
[[nodiscard]] json candidate_to_json(const QAutCandidate& c);
// The graph may come from the document or be supplied (it wins when given).
[[nodiscard]] QAutCandidate candidate_from_json(const json& j, GraphPtr graph = nullptr);

void to_json(json& j, const QAutReport& r);
void to_json(json& j, const RadoCertificate& c);

}  // namespace qsym
