#include "qsym/reptheory/json.hpp"

#include <charconv>

#include "qsym/error.hpp"
#include "qsym/qperm/json.hpp"

namespace qsym {

void to_json(json& j, const IntertwinerBasis& b) {
  j = json{{"source_dim", b.source_dim}, {"target_dim", b.target_dim},
           {"dimension", b.dimension()}, {"basis", b.basis}};
}

void to_json(json& j, const AuditStep& s) {
  j = json{{"step", s.step}, {"ok", s.ok}, {"residual", s.residual}};
}

void to_json(json& j, const LineAuditReport& r) {
  j = json{{"ok", r.ok()}, {"precondition_ok", r.precondition_ok}, {"steps", r.steps}};
  if (!r.precondition_ok) {
    j["precondition_failure"] = r.precondition_failure;
    j["precondition_residual"] = r.precondition_residual;
  }
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
}

json components_to_json(const std::vector<Component>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    out.push_back({{"irreducible", qperm_to_json(c.irreducible)},
                   {"dim", c.irreducible.dim()},
                   {"multiplicity", c.multiplicity}});
  }
  return out;
}

LineWindow line_window_from_json(const json& j) {
  try {
    LineWindow w;
    w.radius = j.at("radius").get<std::int64_t>();
    w.dim = j.at("dim").get<std::size_t>();
    for (const auto& [key, value] : j.at("entries").items()) {
      const auto comma = key.find(',');
      std::int64_t i = 0;
      std::int64_t k = 0;
      const char* begin = key.data();
      const char* end = key.data() + key.size();
      if (comma == std::string::npos ||
          std::from_chars(begin, begin + comma, i).ptr != begin + comma ||
          std::from_chars(begin + comma + 1, end, k).ptr != end) {
        throw ParseError("line window key \"" + key + "\" is not \"i,j\"");
      }
      w.entries[{i, k}] = value.get<CMatrix>();
    }
    return w;
  } catch (const json::exception& e) {
    throw ParseError(std::string("line window: ") + e.what());
  }
}

json line_window_to_json(const LineWindow& w) {
  json entries = json::object();
  for (const auto& [key, m] : w.entries) {
    entries[std::to_string(key.first) + "," + std::to_string(key.second)] = m;
  }
  return json{{"radius", w.radius}, {"dim", w.dim}, {"entries", entries}};
}

}  // namespace qsym
