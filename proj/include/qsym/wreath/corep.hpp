#pragma once

#include <map>
#include <vector>

#include "qsym/numerics/tolerance.hpp"
#include "qsym/qperm/quantum_permutation.hpp"
#include "qsym/wreath/group.hpp"

namespace qsym {

// X-free wreath corepresentation of a finite group G in spectral form: each
// point x carries projections P_x(γ), γ in G, summing to 1 (the image of the
// point mass at γ), and the points are permuted by a quantum permutation on
// the same space. Off the spectral support P_x(γ) = δ_{γ,e}·1 (counit).
class WreathCorep {
 public:
  // spectral[x][γ] for γ = 0..|G|-1. Throws ShapeError/DomainError on shape
  // or index mismatches; the algebraic conditions are left to wreath_validate.
  WreathCorep(FiniteGroup group, QuantumPermutation qperm,
              std::map<Id, std::vector<CMatrix>> spectral);

  static WreathCorep trivial(FiniteGroup group, IndexSet points, std::size_t dim = 1);
  // Dimension one: point x sits at group element elements[x] (unit when
  // absent), points moved by perm.
  static WreathCorep classical(FiniteGroup group, IndexSet points,
                               const std::map<Id, std::size_t>& elements, const Permutation& perm);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return group_; }
  [[nodiscard]] const IndexSet& index_set() const noexcept { return qperm_.index_set(); }
  [[nodiscard]] std::size_t dim() const noexcept { return qperm_.dim(); }
  [[nodiscard]] const QuantumPermutation& qperm() const noexcept { return qperm_; }
  [[nodiscard]] const std::map<Id, std::vector<CMatrix>>& spectral() const noexcept { return spectral_; }

  // P_x(γ), tail included.
  [[nodiscard]] CMatrix projection(Id x, std::size_t gamma) const;
  // Points where either part differs from the tail.
  [[nodiscard]] std::vector<Id> active_points() const;

 private:
  FiniteGroup group_;
  QuantumPermutation qperm_;
  std::map<Id, std::vector<CMatrix>> spectral_;
};

// Projections, partitions of unity, commutation with the own row of the
// quantum permutation, and the quantum permutation itself.
[[nodiscard]] ValidationReport wreath_validate(const WreathCorep& w, const Tolerance& tol = {});

// Spectral form of the coproduct formula; quantum permutation part is the
// tensor of the two. Throws DomainError on group or index set mismatch.
[[nodiscard]] WreathCorep wreath_tensor(const WreathCorep& a, const WreathCorep& b);

// Conjugate space, with the antipode γ -> γ^{-1} and the transposed column.
[[nodiscard]] WreathCorep wreath_contragredient(const WreathCorep& w);

// Largest entrywise distance between two coreps on the same group and points.
[[nodiscard]] double wreath_distance(const WreathCorep& a, const WreathCorep& b);

// Every generator (P_x(γ) and u_xy on active points) as one family, for
// intertwiner computations. Two coreps with the same group and index set
// give families paired element by element.
struct WreathFamilies {
  std::vector<CMatrix> source;
  std::vector<CMatrix> target;
};
[[nodiscard]] WreathFamilies wreath_paired_generators(const WreathCorep& a, const WreathCorep& b);

struct EvDbCertificate {
  CMatrix ev;  // 1 x d²: conj-space ⊗ space -> C
  CMatrix db;  // d² x 1: C -> space ⊗ conj-space
  double ev_residual = 0.0;       // ev as intertwiner conj⊗π -> trivial
  double db_residual = 0.0;       // db as intertwiner trivial -> π⊗conj
  double zigzag_residual = 0.0;   // (1⊗ev)(db⊗1) = 1 and (ev⊗1)(1⊗db) = 1
  double dual_ev_residual = 0.0;  // ev as intertwiner π⊗conj -> trivial
  double dual_db_residual = 0.0;  // db as intertwiner trivial -> conj⊗π
  double dual_zigzag_residual = 0.0;
  bool ok = false;
};

[[nodiscard]] EvDbCertificate wreath_evdb(const WreathCorep& w, const Tolerance& tol = {});

struct WreathFlags {
  bool restricted = true;
  std::size_t spectral_support = 0;  // points whose family is not the counit
  bool half_liberated = false;
  double cross_commutator = 0.0;     // max ||[P_x(γ), P_y(γ')]||, x != y
};

[[nodiscard]] WreathFlags wreath_flags(const WreathCorep& w, const Tolerance& tol = {});

}  // namespace qsym
