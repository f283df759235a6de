#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"
#include "qsym/qperm/index_set.hpp"
#include "qsym/qperm/permutation.hpp"

namespace qsym {

// Finitary magic unitary: dense entries on support x support, identity tail
// u_xy = δ_xy·1 everywhere else. Construction checks shapes only; use
// validate() for the algebraic conditions.
class QuantumPermutation {
 public:
  // entries are row-major over the sorted support: entries[i*|S| + j] = u_{s_i s_j}.
  // An unsorted support is sorted together with its entries.
  QuantumPermutation(IndexSet index_set, std::size_t dim, std::vector<Id> support,
                     std::vector<CMatrix> entries);

  // Builds entries from a callback over support pairs.
  static QuantumPermutation from_function(IndexSet index_set, std::size_t dim,
                                          std::vector<Id> support,
                                          const std::function<CMatrix(Id, Id)>& entry);

  static QuantumPermutation trivial(IndexSet index_set, std::size_t dim = 1);

  [[nodiscard]] const IndexSet& index_set() const noexcept { return index_set_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<Id>& support() const noexcept { return support_; }
  [[nodiscard]] std::size_t support_size() const noexcept { return support_.size(); }

  [[nodiscard]] std::optional<std::size_t> position(Id x) const;
  [[nodiscard]] bool in_support(Id x) const { return position(x).has_value(); }

  // u_xy for arbitrary ids, tail included.
  [[nodiscard]] CMatrix entry(Id x, Id y) const;
  // u_{s_i s_j} by support position.
  [[nodiscard]] const CMatrix& local(std::size_t i, std::size_t j) const {
    return entries_[i * support_.size() + j];
  }
  [[nodiscard]] const std::vector<CMatrix>& entries() const noexcept { return entries_; }

 private:
  IndexSet index_set_;
  std::size_t dim_;
  std::vector<Id> support_;
  std::vector<CMatrix> entries_;
};

struct ValidationReport {
  bool ok = true;
  double worst_residual = 0.0;
  std::string failing_constraint;  // first failure, empty when ok

  // Records a residual; the first one above the threshold sets the failure.
  void record(double residual, double threshold, const std::string& constraint);
};

// ---- constructors and categorical operations -------------------------------

[[nodiscard]] QuantumPermutation from_permutation(const IndexSet& index_set, const Permutation& perm);

[[nodiscard]] ValidationReport validate(const QuantumPermutation& qp, const Tolerance& tol);

// (σ⊗τ)_xy = Σ_z σ_xz ⊗ τ_zy, dimension dim σ · dim τ.
[[nodiscard]] QuantumPermutation tensor(const QuantumPermutation& a, const QuantumPermutation& b);
[[nodiscard]] QuantumPermutation direct_sum(const QuantumPermutation& a, const QuantumPermutation& b);
// entries conj(u_yx)
[[nodiscard]] QuantumPermutation contragredient(const QuantumPermutation& a);
// entries u_yx
[[nodiscard]] QuantumPermutation antipode_transpose(const QuantumPermutation& a);

// Points x of the support with ||u_xx - 1|| > eps_proj.
[[nodiscard]] std::vector<Id> moved_points(const QuantumPermutation& qp, const Tolerance& tol = {});

// ε applied to a one-dimensional quantum permutation: true iff it is the
// identity. Throws DomainError when dim > 1.
[[nodiscard]] bool counit_check(const QuantumPermutation& qp, const Tolerance& tol = {});

// ---- helpers shared by the other modules -----------------------------------

// Same data over a larger support (extra points get tail entries).
[[nodiscard]] QuantumPermutation extend_support(const QuantumPermutation& qp,
                                                const std::vector<Id>& extra);
// Restriction to the moved points.
[[nodiscard]] QuantumPermutation trim_support(const QuantumPermutation& qp, const Tolerance& tol = {});
// Renames ids through an injective map into a new index set.
[[nodiscard]] QuantumPermutation relabel(const QuantumPermutation& qp, const std::function<Id(Id)>& f,
                                         IndexSet target);
// Entries V u V* for a unitary V.
[[nodiscard]] QuantumPermutation conjugate(const QuantumPermutation& qp, const CMatrix& v);

// Largest Frobenius norm of a commutator between two entries.
[[nodiscard]] double max_entry_commutator(const QuantumPermutation& qp);
// dim 1 and every entry is 0 or 1 up to eps_proj.
[[nodiscard]] bool is_classical(const QuantumPermutation& qp, const Tolerance& tol = {});
// Largest entrywise Frobenius distance, over the joint support.
[[nodiscard]] double entry_distance(const QuantumPermutation& a, const QuantumPermutation& b);

}  // namespace qsym
