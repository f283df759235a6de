#pragma once

#include "qsym/numerics/json.hpp"
#include "qsym/wreath/corep.hpp"
#include "qsym/wreath/magic.hpp"

namespace qsym {

// qperm schema plus {"group": ..., "spectral": {"x": {"γ": matrix}}}.
[[nodiscard]] json wreath_to_json(const WreathCorep& w);
[[nodiscard]] WreathCorep wreath_from_json(const json& j);

void to_json(json& j, const EvDbCertificate& c);
void to_json(json& j, const WreathFlags& f);

// {"vertices": index set, "copies": qperm, "local": {"i": qperm}}
[[nodiscard]] json magic_wreath_to_json(const MagicWreathCorep& w);
[[nodiscard]] MagicWreathCorep magic_wreath_from_json(const json& j);

}  // namespace qsym
