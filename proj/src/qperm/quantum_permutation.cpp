#include "qsym/qperm/quantum_permutation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qsym/error.hpp"

namespace qsym {
namespace {

std::vector<Id> sorted_union(const std::vector<Id>& a, const std::vector<Id>& b) {
  std::vector<Id> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_same_index_set(const QuantumPermutation& a, const QuantumPermutation& b,
                            const char* op) {
  if (!(a.index_set() == b.index_set()))
    throw DomainError(std::string(op) + ": index sets differ (" + a.index_set().describe() +
                      " vs " + b.index_set().describe() + ")");
}

std::string pair_name(Id x, Id y) { return std::to_string(x) + "," + std::to_string(y); }

}  // namespace

QuantumPermutation::QuantumPermutation(IndexSet index_set, std::size_t dim,
                                       std::vector<Id> support, std::vector<CMatrix> entries)
    : index_set_(std::move(index_set)), dim_(dim) {
  if (dim == 0) throw DomainError("quantum permutation: dimension must be positive");
  const std::size_t n = support.size();
  if (entries.size() != n * n)
    throw ShapeError("quantum permutation: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries.size()));
  for (Id x : support)
    if (!index_set_.contains(x))
      throw DomainError("quantum permutation: id " + std::to_string(x) + " outside " +
                        index_set_.describe());
  for (const auto& e : entries)
    if (e.rows() != dim || e.cols() != dim)
      throw ShapeError("quantum permutation: entry is not " + std::to_string(dim) + "x" +
                       std::to_string(dim));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  for (std::size_t i = 1; i < n; ++i)
    if (support[order[i]] == support[order[i - 1]])
      throw DomainError("quantum permutation: repeated support id " +
                        std::to_string(support[order[i]]));
  support_.resize(n);
  entries_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    support_[i] = support[order[i]];
    for (std::size_t j = 0; j < n; ++j) entries_[i * n + j] = std::move(entries[order[i] * n + order[j]]);
  }
}

QuantumPermutation QuantumPermutation::from_function(IndexSet index_set, std::size_t dim,
                                                     std::vector<Id> support,
                                                     const std::function<CMatrix(Id, Id)>& entry) {
  std::sort(support.begin(), support.end());
  std::vector<CMatrix> entries;
  entries.reserve(support.size() * support.size());
  for (Id x : support)
    for (Id y : support) entries.push_back(entry(x, y));
  return {std::move(index_set), dim, std::move(support), std::move(entries)};
}

QuantumPermutation QuantumPermutation::trivial(IndexSet index_set, std::size_t dim) {
  return {std::move(index_set), dim, {}, {}};
}

std::optional<std::size_t> QuantumPermutation::position(Id x) const {
  const auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - support_.begin());
}

CMatrix QuantumPermutation::entry(Id x, Id y) const {
  const auto i = position(x);
  const auto j = position(y);
  if (i && j) return local(*i, *j);
  if (x == y) return CMatrix::identity(dim_);
  return CMatrix::zero(dim_, dim_);
}

void ValidationReport::record(double residual, double threshold, const std::string& constraint) {
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  worst_residual = std::max(worst_residual, residual);
  if (residual > threshold && ok) {
    ok = false;
    failing_constraint = constraint;
  }
}

QuantumPermutation from_permutation(const IndexSet& index_set, const Permutation& perm) {
  std::vector<Id> support = perm.moved_points();
  for (Id x : support)
    if (!index_set.contains(x))
      throw DomainError("from_permutation: point " + std::to_string(x) + " outside " +
                        index_set.describe());
  // u_xy = 1 iff x = perm(y)
  return QuantumPermutation::from_function(index_set, 1, std::move(support), [&](Id x, Id y) {
    return CMatrix::scalar(x == perm(y) ? 1.0 : 0.0);
  });
}

ValidationReport validate(const QuantumPermutation& qp, const Tolerance& tol) {
  ValidationReport r;
  const std::size_t n = qp.support_size();
  const std::size_t d = qp.dim();
  const CMatrix one = CMatrix::identity(d);
  const auto& s = qp.support();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix& u = qp.local(i, j);
      if (!u.all_finite()) {
        r.record(std::numeric_limits<double>::infinity(), tol.eps_proj,
                 "finite entry " + pair_name(s[i], s[j]));
        continue;
      }
      r.record(frobenius_distance(u, u.adjoint()), tol.eps_proj,
               "self-adjoint entry " + pair_name(s[i], s[j]));
      r.record(frobenius_distance(u * u, u), tol.eps_proj,
               "idempotent entry " + pair_name(s[i], s[j]));
    }
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix row(d, d);
    CMatrix col(d, d);
    for (std::size_t j = 0; j < n; ++j) {
      row += qp.local(i, j);
      col += qp.local(j, i);
    }
    r.record(frobenius_distance(row, one), tol.eps_proj, "row sum " + std::to_string(s[i]));
    r.record(frobenius_distance(col, one), tol.eps_proj, "column sum " + std::to_string(s[i]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        r.record(frobenius_norm(qp.local(i, j) * qp.local(i, k)), tol.eps_proj,
                 "row orthogonality " + std::to_string(s[i]));
        r.record(frobenius_norm(qp.local(j, i) * qp.local(k, i)), tol.eps_proj,
                 "column orthogonality " + std::to_string(s[i]));
      }
  return r;
}

QuantumPermutation tensor(const QuantumPermutation& a, const QuantumPermutation& b) {
  require_same_index_set(a, b, "tensor");
  const std::vector<Id> u = sorted_union(a.support(), b.support());
  const std::size_t d = a.dim() * b.dim();
  // Tail entries of either factor vanish for z outside the union, so the
  // coproduct sum runs over the union only.
  std::vector<CMatrix> ea, eb;
  ea.reserve(u.size() * u.size());
  eb.reserve(u.size() * u.size());
  for (Id x : u)
    for (Id y : u) {
      ea.push_back(a.entry(x, y));
      eb.push_back(b.entry(x, y));
    }
  const std::size_t n = u.size();
  std::vector<CMatrix> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix acc(d, d);
      for (std::size_t k = 0; k < n; ++k) {
        const CMatrix& f = ea[i * n + k];
        const CMatrix& g = eb[k * n + j];
        if (f.is_zero() || g.is_zero()) continue;
        acc += kron(f, g);
      }
      entries.push_back(std::move(acc));
    }
  return {a.index_set(), d, u, std::move(entries)};
}

QuantumPermutation direct_sum(const QuantumPermutation& a, const QuantumPermutation& b) {
  require_same_index_set(a, b, "direct_sum");
  return QuantumPermutation::from_function(
      a.index_set(), a.dim() + b.dim(), sorted_union(a.support(), b.support()),
      [&](Id x, Id y) { return block_diag(a.entry(x, y), b.entry(x, y)); });
}

QuantumPermutation contragredient(const QuantumPermutation& a) {
  return QuantumPermutation::from_function(a.index_set(), a.dim(), a.support(),
                                           [&](Id x, Id y) { return a.entry(y, x).conj(); });
}

QuantumPermutation antipode_transpose(const QuantumPermutation& a) {
  return QuantumPermutation::from_function(a.index_set(), a.dim(), a.support(),
                                           [&](Id x, Id y) { return a.entry(y, x); });
}

std::vector<Id> moved_points(const QuantumPermutation& qp, const Tolerance& tol) {
  std::vector<Id> out;
  const CMatrix one = CMatrix::identity(qp.dim());
  for (std::size_t i = 0; i < qp.support_size(); ++i)
    if (frobenius_distance(qp.local(i, i), one) > tol.eps_proj) out.push_back(qp.support()[i]);
  return out;
}

bool counit_check(const QuantumPermutation& qp, const Tolerance& tol) {
  if (qp.dim() != 1)
    throw DomainError("counit_check: dimension " + std::to_string(qp.dim()) + " is not 1");
  return moved_points(qp, tol).empty();
}

QuantumPermutation extend_support(const QuantumPermutation& qp, const std::vector<Id>& extra) {
  std::vector<Id> sorted_extra = extra;
  std::sort(sorted_extra.begin(), sorted_extra.end());
  sorted_extra.erase(std::unique(sorted_extra.begin(), sorted_extra.end()), sorted_extra.end());
  return QuantumPermutation::from_function(qp.index_set(), qp.dim(),
                                           sorted_union(qp.support(), sorted_extra),
                                           [&](Id x, Id y) { return qp.entry(x, y); });
}

QuantumPermutation trim_support(const QuantumPermutation& qp, const Tolerance& tol) {
  return QuantumPermutation::from_function(qp.index_set(), qp.dim(), moved_points(qp, tol),
                                           [&](Id x, Id y) { return qp.entry(x, y); });
}

QuantumPermutation relabel(const QuantumPermutation& qp, const std::function<Id(Id)>& f,
                           IndexSet target) {
  std::vector<Id> support;
  support.reserve(qp.support_size());
  for (Id x : qp.support()) support.push_back(f(x));
  return {std::move(target), qp.dim(), std::move(support), qp.entries()};
}

QuantumPermutation conjugate(const QuantumPermutation& qp, const CMatrix& v) {
  const CMatrix va = v.adjoint();
  std::vector<CMatrix> entries;
  entries.reserve(qp.entries().size());
  for (const auto& e : qp.entries()) entries.push_back(v * e * va);
  return {qp.index_set(), qp.dim(), qp.support(), std::move(entries)};
}

double max_entry_commutator(const QuantumPermutation& qp) {
  double worst = 0.0;
  const auto& e = qp.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      worst = std::max(worst, frobenius_norm(commutator(e[i], e[j])));
  return worst;
}

bool is_classical(const QuantumPermutation& qp, const Tolerance& tol) {
  if (qp.dim() != 1) return false;
  for (const auto& e : qp.entries()) {
    const cplx z = e(0, 0);
    if (std::abs(z) > tol.eps_proj && std::abs(z - 1.0) > tol.eps_proj) return false;
  }
  return true;
}

double entry_distance(const QuantumPermutation& a, const QuantumPermutation& b) {
  require_same_index_set(a, b, "entry_distance");
  if (a.dim() != b.dim()) throw DomainError("entry_distance: dimensions differ");
  double worst = 0.0;
  const std::vector<Id> u = sorted_union(a.support(), b.support());
  for (Id x : u)
    for (Id y : u)
      worst = std::max(worst, frobenius_distance(a.entry(x, y), b.entry(x, y)));
  return worst;
}

}  // namespace qsym
