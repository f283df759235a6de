#pragma once

#include <json.hpp>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"

namespace qsym {

using json = nlohmann::json;

// {"rows":n,"cols":m,"data":[[re,im],...]} in row-major order.
void to_json(json& j, const CMatrix& m);
// Throws ParseError on malformed documents or non-finite entries.
void from_json(const json& j, CMatrix& m);

void to_json(json& j, const Tolerance& t);

}  // namespace qsym
