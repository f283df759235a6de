#include "qsym/wreath/json.hpp"

#include "qsym/error.hpp"
#include "qsym/qperm/json.hpp"

namespace qsym {
namespace {

Id parse_key(const std::string& key, const char* what) {
  try {
    std::size_t used = 0;
    const Id v = std::stoull(key, &used);
    if (used != key.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " key \"" + key + "\" is not a natural number");
  }
}

}  // namespace

json wreath_to_json(const WreathCorep& w) {
  json j = qperm_to_json(w.qperm());
  j["group"] = w.group();
  json spectral = json::object();
  for (const auto& [x, family] : w.spectral()) {
    json per = json::object();
    for (std::size_t g = 0; g < family.size(); ++g) per[std::to_string(g)] = family[g];
    spectral[std::to_string(x)] = per;
  }
  j["spectral"] = spectral;
  return j;
}

WreathCorep wreath_from_json(const json& j) {
  try {
    FiniteGroup group = group_from_json(j.at("group"));
    QuantumPermutation qp = qperm_from_json(j);
    std::map<Id, std::vector<CMatrix>> spectral;
    if (j.contains("spectral")) {
      for (const auto& [xk, per] : j.at("spectral").items()) {
        std::vector<CMatrix> family(group.order(), CMatrix::zero(qp.dim(), qp.dim()));
        for (const auto& [gk, m] : per.items()) {
          const Id g = parse_key(gk, "group element");
          if (g >= group.order()) throw ParseError("group element out of range");
          family[g] = m.get<CMatrix>();
        }
        spectral[parse_key(xk, "point")] = std::move(family);
      }
    }
    return {std::move(group), std::move(qp), std::move(spectral)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("wreath corep: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("wreath corep: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("wreath corep: ") + e.what());
  }
}

void to_json(json& j, const EvDbCertificate& c) {
  j = json{{"ok", c.ok},
           {"ev", c.ev},
           {"db", c.db},
           {"ev_residual", c.ev_residual},
           {"db_residual", c.db_residual},
           {"zigzag_residual", c.zigzag_residual},
           {"dual_ev_residual", c.dual_ev_residual},
           {"dual_db_residual", c.dual_db_residual},
           {"dual_zigzag_residual", c.dual_zigzag_residual}};
}

void to_json(json& j, const WreathFlags& f) {
  j = json{{"restricted", f.restricted},
           {"spectral_support", f.spectral_support},
           {"half_liberated", f.half_liberated},
           {"cross_commutator", f.cross_commutator}};
}

json magic_wreath_to_json(const MagicWreathCorep& w) {
  json local = json::object();
  for (const auto& [i, qp] : w.local()) local[std::to_string(i)] = qperm_to_json(qp);
  return json{{"vertices", index_set_to_json(w.vertices())},
              {"copies", qperm_to_json(w.copies())},
              {"local", local}};
}

MagicWreathCorep magic_wreath_from_json(const json& j) {
  try {
    IndexSet vertices = index_set_from_json(j.at("vertices"));
    QuantumPermutation copies = qperm_from_json(j.at("copies"));
    std::map<Id, QuantumPermutation> local;
    if (j.contains("local")) {
      for (const auto& [ik, qj] : j.at("local").items()) {
        local.emplace(parse_key(ik, "copy"), qperm_from_json(qj));
      }
    }
    return {std::move(vertices), std::move(copies), std::move(local)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("magic wreath corep: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("magic wreath corep: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("magic wreath corep: ") + e.what());
  }
}

}  // namespace qsym
