#include "commands.hpp"
#include "qsym/error.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/qperm/json.hpp"
#include "qsym/qperm/partial.hpp"
#include "qsym/reptheory/decompose.hpp"
#include "qsym/reptheory/intertwiner.hpp"
#include "qsym/reptheory/json.hpp"
#include "qsym/reptheory/line_audit.hpp"
#include "qsym/wreath/corep.hpp"
#include "qsym/wreath/json.hpp"

namespace qsym::cli {
namespace {

QuantumPermutation qperm_input(const Job& job, std::size_t i) { return qperm_from_json(input(job, i, "quantum permutation")); }
WreathCorep wreath_input(const Job& job, std::size_t i) { return wreath_from_json(input(job, i, "wreath corep")); }

json qperm_summary(const QuantumPermutation& qp, const ValidationReport& rep) {
  return {{"validation", rep},
          {"dim", qp.dim()},
          {"support_size", qp.support_size()},
          {"classical", is_classical(qp)},
          {"max_entry_commutator", max_entry_commutator(qp)}};
}

Outcome qperm_validate(const Job& job, const Tolerance& tol) {
  const auto qp = qperm_input(job, 0);
  const auto rep = validate(qp, tol);
  return {rep.ok, qperm_summary(qp, rep), {}};
}

Outcome qperm_binary(const Job& job, const Tolerance& tol, bool is_tensor) {
  const auto a = qperm_input(job, 0);
  const auto qp = is_tensor ? tensor(a, qperm_input(job, 1)) : contragredient(a);
  const auto rep = validate(qp, tol);
  json result = qperm_summary(qp, rep);
  result["qperm"] = qperm_to_json(qp);
  return {rep.ok, std::move(result), {}};
}

Outcome qperm_bf(const Job& job, const Tolerance& tol) {
  const auto policy = job.policy.empty() ? BfPolicy::coordinate : parse_bf_policy(job.policy);
  const auto state = bf_run(job.steps.value_or(10), policy, job.seed, tol);
  const auto rep = validate_partial(state, tol);
  json result{{"report", rep},
              {"steps", state.steps()},
              {"policy", to_string(policy)},
              {"domain_size", state.domain().size()},
              {"range_size", state.range().size()},
              {"window", state.window()},
              {"state", partial_to_json(state)}};
  return {rep.ok, std::move(result), {}};
}

Outcome rep_decompose(const Job& job, const Tolerance& tol) {
  const auto qp = qperm_input(job, 0);
  const auto comps = decompose(qp, tol, job.seed);
  std::size_t total = 0;
  for (const auto& c : comps) total += c.multiplicity * c.irreducible.dim();
  json result{{"components", components_to_json(comps)},
              {"distinct", comps.size()},
              {"irreducible", comps.size() == 1 && comps.front().multiplicity == 1},
              {"total_dim", total}};
  return {total == qp.dim(), std::move(result), {}};
}

Outcome rep_equiv(const Job& job, const Tolerance& tol) {
  const auto a = qperm_input(job, 0);
  const auto b = qperm_input(job, 1);
  const auto u = unitarily_equivalent(a, b, tol, job.seed);
  json result{{"equivalent", u.has_value()}};
  if (u) result["intertwiner"] = *u;
  return {u.has_value(), std::move(result), {}};
}

Outcome rep_audit_line(const Job& job, const Tolerance& tol) {
  const auto window = line_window_from_json(input(job, 0, "line window"));
  const auto rep = audit_line_steps(window, tol);
  return {rep.ok(), json(rep), {}};
}

Outcome graph_info(const Job& job, const Tolerance&) {
  if (job.graph.empty()) throw ParseError("graph info: --graph is required");
  const GraphPtr g = make_graph(job.graph);
  json result{{"name", g->name()}, {"finite", g->is_finite()}};
  result["order"] = g->order() ? json(*g->order()) : json(nullptr);
  auto guarded = [&](auto f) -> json {
    try {
      return f();
    } catch (const DomainError&) {
      return nullptr;
    }
  };
  result["connected"] = guarded([&] { return json(g->is_connected()); });
  result["bipartite"] = guarded([&] { return json(g->is_bipartite()); });
  // adjacency among the first r vertex ids
  const std::size_t r = job.r.value_or(0);
  json edges = json::array();
  json labels = json::array();
  std::vector<Id> ids;
  for (Id v = 0; ids.size() < r && v < 4 * r + 64; ++v)
    if (g->contains(v)) ids.push_back(v);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    labels.push_back(g->decode(ids[i]));
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g->adjacent(ids[i], ids[j])) edges.push_back({ids[i], ids[j]});
  }
  if (r > 0) {
    result["vertices"] = ids;
    result["labels"] = std::move(labels);
    result["edges"] = std::move(edges);
  }
  return {true, std::move(result), {}};
}

Outcome wreath_validate_cmd(const Job& job, const Tolerance& tol) {
  const auto w = wreath_input(job, 0);
  const auto rep = wreath_validate(w, tol);
  return {rep.ok, {{"validation", rep}, {"dim", w.dim()}, {"group_order", w.group().order()}}, {}};
}

Outcome wreath_binary(const Job& job, const Tolerance& tol, bool is_tensor) {
  const auto a = wreath_input(job, 0);
  const auto w = is_tensor ? wreath_tensor(a, wreath_input(job, 1)) : wreath_contragredient(a);
  const auto rep = wreath_validate(w, tol);
  return {rep.ok, {{"validation", rep}, {"dim", w.dim()}, {"corep", wreath_to_json(w)}}, {}};
}

Outcome wreath_evdb_cmd(const Job& job, const Tolerance& tol) {
  const auto cert = wreath_evdb(wreath_input(job, 0), tol);
  return {cert.ok, json(cert), {}};
}

Outcome wreath_flags_cmd(const Job& job, const Tolerance& tol) {
  return {true, json(wreath_flags(wreath_input(job, 0), tol)), {}};
}

}  // namespace

void register_algebra_commands(std::map<std::string, Handler>& out) {
  out["qperm validate"] = qperm_validate;
  out["qperm tensor"] = [](const Job& j, const Tolerance& t) { return qperm_binary(j, t, true); };
  out["qperm dual"] = [](const Job& j, const Tolerance& t) { return qperm_binary(j, t, false); };
  out["qperm bf"] = qperm_bf;
  out["rep decompose"] = rep_decompose;
  out["rep equiv"] = rep_equiv;
  out["rep audit-line"] = rep_audit_line;
  out["graph info"] = graph_info;
  out["wreath validate"] = wreath_validate_cmd;
  out["wreath tensor"] = [](const Job& j, const Tolerance& t) { return wreath_binary(j, t, true); };
  out["wreath dual"] = [](const Job& j, const Tolerance& t) { return wreath_binary(j, t, false); };
  out["wreath evdb"] = wreath_evdb_cmd;
  out["wreath flags"] = wreath_flags_cmd;
}

}  // namespace qsym::cli
