#include "qsym/pauli/json.hpp"

namespace qsym {

void to_json(json& j, const RelationReport& r) {
  j = json{{"ok", r.ok},
           {"worst_residual", r.worst_residual},
           {"self_adjoint", r.self_adjoint},
           {"anticommute", r.anticommute},
           {"commute", r.commute},
           {"orthogonal", r.orthogonal},
           {"s3_sum", r.s3_sum}};
  if (!r.ok) j["failure"] = r.failure;
}

void to_json(json& j, const Irreducible& irr) {
  j = json{{"base", irr.base}, {"dim", irr.dim}};
}

void to_json(json& j, const FusionResult& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks) {
    blocks.push_back(
        {{"product", b.product}, {"dim", b.isometry.cols()}, {"residual", b.residual}, {"certified", b.certified}});
  }
  j = json{{"ok", f.ok}, {"total_dim", f.total_dim}, {"blocks", blocks}};
}

void to_json(json& j, const TransferReport& t) {
  j = json{{"f_irreducibles", t.f_irreducibles},
           {"f_minus", t.f_minus},
           {"f_minus_orbits", t.f_minus_orbits},
           {"s_plus", t.s_plus},
           {"group_boundary", t.group_boundary},
           {"irreducible_boundary", t.irreducible_boundary()},
           {"inner_boundary", t.inner_boundary},
           {"outer_boundary", t.outer_boundary},
           {"packet_bound", t.packet_bound},
           {"transfer_holds", t.transfer_holds}};
}

}  // namespace qsym
