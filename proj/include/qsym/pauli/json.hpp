#pragma once

#include "qsym/numerics/json.hpp"
#include "qsym/pauli/folner.hpp"
#include "qsym/pauli/model.hpp"

namespace qsym {

void to_json(json& j, const RelationReport& r);
void to_json(json& j, const Irreducible& irr);
void to_json(json& j, const FusionResult& f);
void to_json(json& j, const TransferReport& t);

}  // namespace qsym
