#include "qsym/qaut/disjoint_union.hpp"

#include <algorithm>
#include <set>

#include "qsym/error.hpp"
#include "qsym/graphs/composite.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

std::optional<Id> copy_count(const IndexSet& s) {
  return s.is_finite() ? std::optional<Id>(s.size()) : std::nullopt;
}

}  // namespace

QAutCandidate du_forward(const MagicWreathCorep& pi, GraphPtr component, const Tolerance& tol) {
  if (!component->is_connected()) throw DomainError("du_forward: " + component->name() + " is not connected");
  const IndexSet vx = component->index_set();
  if (vx.kind() != pi.vertices().kind() || vx.size() != pi.vertices().size()) {
    throw DomainError("du_forward: vertex set does not match " + component->name());
  }
  const ValidationReport v = magic_wreath_validate(pi, tol);
  if (!v.ok) throw DomainError("du_forward: invalid wreath data (" + v.failing_constraint + ")");
  for (const auto& [i, qp] : pi.local()) {
    const QAutReport r = is_quantum_automorphism(make_candidate(component, qp), tol);
    if (!r.ok) {
      throw DomainError("du_forward: copy " + std::to_string(i) + " is not a quantum automorphism (" +
                        r.failure + ")");
    }
  }

  const GraphPtr g = disjoint_union(component, copy_count(pi.copies().index_set()));
  const auto& du = dynamic_cast<const DisjointUnionGraph&>(*g);
  std::set<Id> support;
  if (!pi.copies().support().empty()) {
    const auto n = component->order();
    if (!n) throw DomainError("du_forward: moving copies of an infinite graph is not finitary");
    for (Id i : pi.copies().support())
      for (Id x = 0; x < *n; ++x) support.insert(du.vertex(i, x));
  }
  for (const auto& [i, qp] : pi.local())
    for (Id x : qp.support()) support.insert(du.vertex(i, x));

  auto entry = [&](Id s, Id t) {
    const auto [i, x] = du.coordinates(s);
    const auto [j, y] = du.coordinates(t);
    const CMatrix cij = pi.copies().entry(i, j);
    if (cij.is_zero()) return CMatrix::zero(pi.dim(), pi.dim());
    return pi.entry(i, x, y) * cij;
  };
  return make_candidate(g, QuantumPermutation::from_function(g->index_set(), pi.dim(),
                                                             {support.begin(), support.end()}, entry));
}

MagicWreathCorep du_backward(const QAutCandidate& u, const Tolerance& tol) {
  const auto* du = dynamic_cast<const DisjointUnionGraph*>(u.graph.get());
  if (du == nullptr) throw DomainError("du_backward: " + u.graph->name() + " is not a disjoint union");
  const GraphPtr& component = du->component();
  if (!component->is_connected()) throw DomainError("du_backward: " + component->name() + " is not connected");
  const QAutReport r = is_quantum_automorphism(u, tol);
  if (!r.ok) throw DomainError("du_backward: input is not a quantum automorphism (" + r.failure + ")");

  const std::size_t dim = u.qp.dim();
  // per copy: vertices in the support
  std::map<Id, std::vector<Id>> rows;
  for (Id s : u.qp.support()) {
    const auto [i, x] = du->coordinates(s);
    rows[i].push_back(x);
  }
  std::vector<Id> copies;
  for (const auto& [i, xs] : rows) copies.push_back(i);

  auto copy_entry = [&](Id i, Id j, Id base) {
    CMatrix acc(dim, dim);
    std::set<Id> vs(rows[j].begin(), rows[j].end());
    vs.insert(base);
    for (Id v : vs) acc += u.qp.entry(du->vertex(i, base), du->vertex(j, v));
    return acc;
  };

  std::vector<CMatrix> copy_entries;
  for (Id i : copies) {
    std::vector<Id> bases = rows[i];
    if (std::find(bases.begin(), bases.end(), Id{0}) == bases.end()) bases.push_back(0);
    for (Id j : copies) {
      const CMatrix ref = copy_entry(i, j, bases.front());
      for (std::size_t b = 1; b < bases.size(); ++b) {
        const double diff = frobenius_norm(copy_entry(i, j, bases[b]) - ref);
        if (diff > tol.eps_equal) {
          throw ConsistencyError("du_backward: copy entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") depends on the base vertex (difference " + std::to_string(diff) + ")");
        }
      }
      copy_entries.push_back(ref);
    }
  }
  const IndexSet copy_set = du->copies() ? IndexSet::finite(*du->copies()) : IndexSet::naturals();
  QuantumPermutation copy_qp(copy_set, dim, copies, std::move(copy_entries));

  std::map<Id, QuantumPermutation> local;
  for (Id i : copies) {
    auto entry = [&](Id x, Id y) {
      CMatrix acc(dim, dim);
      for (Id j : copies) acc += u.qp.entry(du->vertex(i, x), du->vertex(j, y));
      return acc;
    };
    QuantumPermutation qp =
        trim_support(QuantumPermutation::from_function(component->index_set(), dim, rows[i], entry), tol);
    if (!qp.support().empty()) local.emplace(i, std::move(qp));
  }
  return {component->index_set(), std::move(copy_qp), std::move(local)};
}

}  // namespace qsym
