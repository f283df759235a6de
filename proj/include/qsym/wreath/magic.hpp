#pragma once

#include <map>
#include <vector>

#include "qsym/numerics/tolerance.hpp"
#include "qsym/qperm/quantum_permutation.hpp"

namespace qsym {

// I-free wreath corepresentation whose per-point data are quantum
// permutations of a vertex set V (a representation of the algebra generated
// by a magic unitary), together with a quantum permutation of the copies I.
// Copies absent from `local` carry the trivial quantum permutation.
class MagicWreathCorep {
 public:
  MagicWreathCorep(IndexSet vertices, QuantumPermutation copies,
                   std::map<Id, QuantumPermutation> local);

  static MagicWreathCorep trivial(IndexSet vertices, IndexSet copies, std::size_t dim = 1);

  [[nodiscard]] const IndexSet& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const QuantumPermutation& copies() const noexcept { return copies_; }
  [[nodiscard]] const std::map<Id, QuantumPermutation>& local() const noexcept { return local_; }
  [[nodiscard]] std::size_t dim() const noexcept { return copies_.dim(); }

  // Quantum permutation of V at copy i (trivial when absent).
  [[nodiscard]] QuantumPermutation at(Id copy) const;
  // (π_i)_{xy}
  [[nodiscard]] CMatrix entry(Id copy, Id x, Id y) const;
  // Copies where either part differs from the tail.
  [[nodiscard]] std::vector<Id> active_copies() const;

 private:
  IndexSet vertices_;
  QuantumPermutation copies_;
  std::map<Id, QuantumPermutation> local_;
};

// Per-copy and copy-level quantum permutation axioms plus the commutation
// (π_i)_{xy} π^I_{ij} = π^I_{ij} (π_i)_{xy}.
[[nodiscard]] ValidationReport magic_wreath_validate(const MagicWreathCorep& w,
                                                     const Tolerance& tol = {});

// (π⊗η)_i(u_xy) = Σ_{k,v} (π^I_{ik} ⊗ 1)((π_i)_{xv} ⊗ (η_k)_{vy}); copy part π^I ⊗ η^I.
[[nodiscard]] MagicWreathCorep magic_wreath_tensor(const MagicWreathCorep& a,
                                                   const MagicWreathCorep& b);

[[nodiscard]] double magic_wreath_distance(const MagicWreathCorep& a, const MagicWreathCorep& b);

}  // namespace qsym
