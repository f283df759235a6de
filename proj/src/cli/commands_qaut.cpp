#include <string>

#include "commands.hpp"
#include "qsym/error.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/qaut/constructions.hpp"
#include "qsym/qaut/disjoint_union.hpp"
#include "qsym/qaut/json.hpp"
#include "qsym/qaut/rado_certify.hpp"
#include "qsym/qperm/json.hpp"
#include "qsym/reptheory/intertwiner.hpp"
#include "qsym/wreath/json.hpp"

namespace qsym::cli {
namespace {

GraphPtr optional_graph(const Job& job) { return job.graph.empty() ? nullptr : make_graph(job.graph); }

GraphPtr required_graph(const Job& job) {
  if (job.graph.empty()) throw ParseError(job.command + ": --graph is required");
  return make_graph(job.graph);
}

QAutCandidate candidate_input(const Job& job, std::size_t i, GraphPtr graph = nullptr) {
  return candidate_from_json(input(job, i, "candidate"), std::move(graph));
}

json checked(const QAutCandidate& c, const QAutReport& rep) {
  return {{"report", rep},
          {"dim", c.qp.dim()},
          {"support_size", c.qp.support_size()},
          {"scope", to_string(c.scope)},
          {"candidate", candidate_to_json(c)}};
}

Outcome qaut_check(const Job& job, const Tolerance& tol) {
  const auto c = candidate_input(job, 0, optional_graph(job));
  const auto rep = is_quantum_automorphism(c, tol);
  json result{{"report", rep}, {"dim", c.qp.dim()}, {"scope", to_string(c.scope)}};
  if (rep.ok) {
    result["distance_obstruction"] = distance_obstruction(c, tol);
    result["adjacency_commutator"] = adjacency_commutator(c);
  }
  return {rep.ok, std::move(result), {}};
}

Outcome qaut_disjoint(const Job& job, const Tolerance& tol) {
  const GraphPtr g = required_graph(job);
  const Permutation sigma = Permutation::parse(job.sigma.empty() ? "id" : job.sigma);
  const Permutation tau = Permutation::parse(job.tau.empty() ? "id" : job.tau);
  const std::size_t k = job.k.value_or(2);
  const auto c = disjoint_auto(sigma, tau, k, g, tol);
  const auto rep = is_quantum_automorphism(c, tol);
  json result = checked(c, rep);
  result["irreducible"] = is_irreducible(c.qp, tol);
  result["algebra_dim"] = generated_algebra_dimension(entry_family(c.qp), 4, tol);
  const auto tuple = orbit_separating_tuple(sigma, k);
  result["orbit_separating_tuple"] = tuple ? json(*tuple) : json(nullptr);
  return {rep.ok, std::move(result), {}};
}

Outcome qaut_lift(const Job& job, const Tolerance& tol) {
  const auto x = candidate_input(job, 0);
  const auto y = candidate_input(job, 1);
  const ProductKind kind = parse_product_kind(job.kind.empty() ? "cartesian" : job.kind);
  const auto c = product_lift(x, y, kind, tol);
  const auto rep = is_quantum_automorphism(c, tol);
  json result = checked(c, rep);
  result["kind"] = to_string(kind);
  return {rep.ok, std::move(result), {}};
}

Outcome qaut_embed(const Job& job, const Tolerance& tol) {
  const GraphPtr weak = required_graph(job);
  if (job.inputs.empty()) throw ParseError("qaut embed: at least one --in candidate is required");
  if (!job.coords.empty() && job.coords.size() != job.inputs.size())
    throw ParseError("qaut embed: --coords must list one coordinate per --in");
  std::map<Id, QAutCandidate> family;
  for (std::size_t i = 0; i < job.inputs.size(); ++i) {
    const Id coord = job.coords.empty() ? i : job.coords[i];
    if (!family.emplace(coord, candidate_input(job, i)).second) throw ParseError("qaut embed: repeated coordinate");
  }
  const auto c = weak_product_embed(family, weak, job.extra.value_or(0), tol);
  const auto rep = is_quantum_automorphism(c, tol);
  return {rep.ok, checked(c, rep), {}};
}

Outcome qaut_hamming(const Job& job, const Tolerance& tol) {
  const GraphPtr g = required_graph(job);
  const std::string prefix = "hamming:";
  if (job.graph.rfind(prefix, 0) != 0) throw ParseError("qaut hamming: --graph must be hamming:n");
  const Id n = std::stoull(job.graph.substr(prefix.size()));
  if (!job.coords.empty() && job.coords.size() != job.inputs.size())
    throw ParseError("qaut hamming: --coords must list one coordinate per --in");
  std::map<Id, QuantumPermutation> family;
  for (std::size_t i = 0; i < job.inputs.size(); ++i) {
    const Id coord = job.coords.empty() ? i : job.coords[i];
    family.emplace(coord, qperm_from_json(input(job, i, "quantum permutation")));
  }
  const Permutation perm = Permutation::parse(job.perm.empty() ? "id" : job.perm);
  const auto c = hamming_wreath(family, perm, n, job.extra.value_or(0), tol);
  const auto rep = is_quantum_automorphism(c, tol);
  return {rep.ok, checked(c, rep), {}};
}

Outcome qaut_du_forward(const Job& job, const Tolerance& tol) {
  const auto pi = magic_wreath_from_json(input(job, 0, "magic wreath corep"));
  const auto c = du_forward(pi, required_graph(job), tol);
  const auto rep = is_quantum_automorphism(c, tol);
  return {rep.ok, checked(c, rep), {}};
}

Outcome qaut_du_backward(const Job& job, const Tolerance& tol) {
  const auto c = candidate_input(job, 0, optional_graph(job));
  const auto pi = du_backward(c, tol);
  const auto rep = magic_wreath_validate(pi, tol);
  return {rep.ok,
          {{"validation", rep},
           {"dim", pi.dim()},
           {"active_copies", pi.active_copies()},
           {"corep", magic_wreath_to_json(pi)}},
          {}};
}

Outcome qaut_rado_certify(const Job& job, const Tolerance& tol) {
  GraphPtr g = job.graph.empty() ? make_graph("rado") : make_graph(job.graph);
  const auto c = candidate_input(job, 0, g);
  const auto cert = rado_certify(c, tol, job.witness_bound.value_or(1'000'000));
  return {cert.verdict == RadoVerdict::all_commute, json(cert), {}};
}

}  // namespace

void register_qaut_commands(std::map<std::string, Handler>& out) {
  out["qaut check"] = qaut_check;
  out["qaut disjoint"] = qaut_disjoint;
  out["qaut lift"] = qaut_lift;
  out["qaut embed"] = qaut_embed;
  out["qaut hamming"] = qaut_hamming;
  out["qaut du-f"] = qaut_du_forward;
  out["qaut du-g"] = qaut_du_backward;
  out["qaut rado-certify"] = qaut_rado_certify;
}

}  // namespace qsym::cli
