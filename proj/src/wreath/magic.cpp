#include "qsym/wreath/magic.hpp"

#include <algorithm>

#include "qsym/error.hpp"

namespace qsym {
namespace {

std::vector<Id> merged(std::vector<Id> a, const std::vector<Id>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

MagicWreathCorep::MagicWreathCorep(IndexSet vertices, QuantumPermutation copies,
                                   std::map<Id, QuantumPermutation> local)
    : vertices_(std::move(vertices)), copies_(std::move(copies)), local_(std::move(local)) {
  for (const auto& [i, qp] : local_) {
    if (!copies_.index_set().contains(i)) {
      throw DomainError("magic wreath: copy " + std::to_string(i) + " is not in the copy index set");
    }
    if (!(qp.index_set() == vertices_)) throw DomainError("magic wreath: local vertex sets differ");
    if (qp.dim() != copies_.dim()) throw ShapeError("magic wreath: local dimension differs");
  }
}

MagicWreathCorep MagicWreathCorep::trivial(IndexSet vertices, IndexSet copies, std::size_t dim) {
  return {std::move(vertices), QuantumPermutation::trivial(std::move(copies), dim), {}};
}

QuantumPermutation MagicWreathCorep::at(Id copy) const {
  const auto it = local_.find(copy);
  return it == local_.end() ? QuantumPermutation::trivial(vertices_, dim()) : it->second;
}

CMatrix MagicWreathCorep::entry(Id copy, Id x, Id y) const {
  const auto it = local_.find(copy);
  if (it != local_.end()) return it->second.entry(x, y);
  return x == y ? CMatrix::identity(dim()) : CMatrix::zero(dim(), dim());
}

std::vector<Id> MagicWreathCorep::active_copies() const {
  std::vector<Id> keys;
  for (const auto& [i, qp] : local_) keys.push_back(i);
  return merged(keys, copies_.support());
}

ValidationReport magic_wreath_validate(const MagicWreathCorep& w, const Tolerance& tol) {
  ValidationReport rep = validate(w.copies(), tol);
  for (const auto& [i, qp] : w.local()) {
    const ValidationReport local = validate(qp, tol);
    if (!local.ok) rep.record(local.worst_residual, 0.0, "copy " + std::to_string(i) + ": " + local.failing_constraint);
    for (Id j : merged(w.copies().support(), {i})) {
      const CMatrix pij = w.copies().entry(i, j);
      for (Id x : qp.support()) {
        for (Id y : qp.support()) {
          rep.record(frobenius_norm(commutator(qp.entry(x, y), pij)), tol.eps_proj,
                     "commutation copy " + std::to_string(i) + "," + std::to_string(j) +
                         " entry " + std::to_string(x) + "," + std::to_string(y));
        }
      }
    }
  }
  return rep;
}

MagicWreathCorep magic_wreath_tensor(const MagicWreathCorep& a, const MagicWreathCorep& b) {
  if (!(a.vertices() == b.vertices()) || !(a.copies().index_set() == b.copies().index_set())) {
    throw DomainError("magic_wreath_tensor: index sets differ");
  }
  const std::size_t dim = a.dim() * b.dim();
  std::map<Id, QuantumPermutation> local;
  for (Id i : merged(a.active_copies(), b.active_copies())) {
    const std::vector<Id> partners = merged(a.copies().support(), {i});
    std::vector<Id> support = a.at(i).support();
    for (Id k : partners) support = merged(support, b.at(k).support());
    if (support.empty()) continue;

    auto fn = [&](Id x, Id y) {
      CMatrix acc(dim, dim);
      for (Id k : partners) {
        const CMatrix pik = a.copies().entry(i, k);
        if (pik.is_zero()) continue;
        for (Id v : merged(support, {x, y})) {
          const CMatrix left = pik * a.entry(i, x, v);
          if (left.is_zero()) continue;
          acc += kron(left, b.entry(k, v, y));
        }
      }
      return acc;
    };
    local.emplace(i, QuantumPermutation::from_function(a.vertices(), dim, support, fn));
  }
  return {a.vertices(), tensor(a.copies(), b.copies()), std::move(local)};
}

double magic_wreath_distance(const MagicWreathCorep& a, const MagicWreathCorep& b) {
  double worst = entry_distance(a.copies(), b.copies());
  for (Id i : merged(a.active_copies(), b.active_copies())) {
    worst = std::max(worst, entry_distance(a.at(i), b.at(i)));
  }
  return worst;
}

}  // namespace qsym
