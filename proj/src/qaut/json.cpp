#include "qsym/qaut/json.hpp"

#include "qsym/error.hpp"
#include "qsym/qperm/json.hpp"

namespace qsym {

json candidate_to_json(const QAutCandidate& c) {
  json j = qperm_to_json(c.qp);
  j["graph"] = c.graph->name();
  j["scope"] = to_string(c.scope);
  return j;
}

QAutCandidate candidate_from_json(const json& j, GraphPtr graph) {
  try {
    if (!graph) graph = make_graph(j.at("graph").get<std::string>());
    json body = j;
    // the index set follows from the graph when the document omits it
    if (!body.contains("index_set")) body["index_set"] = index_set_to_json(graph->index_set());
    const CheckScope scope =
        j.contains("scope") ? parse_check_scope(j.at("scope").get<std::string>()) : CheckScope::finitary;
    return make_candidate(std::move(graph), qperm_from_json(body), scope);
  } catch (const json::exception& e) {
    throw ParseError(std::string("candidate: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("candidate: ") + e.what());
  }
}

void to_json(json& j, const QAutReport& r) {
  j = json{{"ok", r.ok}, {"worst_residual", r.worst_residual}, {"products_checked", r.products_checked}};
  if (!r.ok) j["failure"] = r.failure;
}

void to_json(json& j, const RadoCertificate& c) {
  j = json{{"verdict", to_string(c.verdict)},
           {"max_commutator", c.max_commutator},
           {"detail", c.detail},
           {"witness_bound", c.witness_bound}};
  if (c.witness) j["witness"] = {{"id", *c.witness}, {"prime", *c.witness_prime}};
  if (c.relation) {
    const auto& r = *c.relation;
    j["relation"] = {{"v", r[0]}, {"w", r[1]}, {"x", r[2]}, {"y", r[3]}, {"residual", c.relation_residual}};
  }
}

}  // namespace qsym
