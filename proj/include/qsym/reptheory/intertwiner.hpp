#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"
#include "qsym/qperm/quantum_permutation.hpp"

namespace qsym {

// A finite list of operators on one Hilbert space. Two families of equal
// length are compared element by element.
using MatrixFamily = std::vector<CMatrix>;

struct IntertwinerBasis {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<CMatrix> basis;  // target_dim x source_dim, Frobenius-orthonormal

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
};

// {T : T a_k = b_k T for all k}. Dimensions are explicit so that empty
// families make sense. Throws ShapeError when the families differ in length
// or an element has the wrong shape.
[[nodiscard]] IntertwinerBasis intertwiners(const MatrixFamily& source, std::size_t source_dim,
                                            const MatrixFamily& target, std::size_t target_dim,
                                            const Tolerance& tol = {});

// max_k ||T a_k - b_k T||_F
[[nodiscard]] double intertwining_residual(const CMatrix& t, const MatrixFamily& source,
                                           const MatrixFamily& target);

// A unitary intertwiner when one exists. Random combinations of the
// intertwiner basis (seeded) are unitarized through their polar part.
[[nodiscard]] std::optional<CMatrix> unitary_intertwiner(const MatrixFamily& source,
                                                         std::size_t source_dim,
                                                         const MatrixFamily& target,
                                                         std::size_t target_dim,
                                                         const Tolerance& tol = {},
                                                         std::uint64_t seed = 0);

// Entries of two quantum permutations over the union of their supports, in
// matching order. Pairs where both sides carry the tail value are skipped.
// Throws DomainError on index set mismatch.
struct PairedFamilies {
  MatrixFamily source;
  MatrixFamily target;
};
[[nodiscard]] PairedFamilies paired_entries(const QuantumPermutation& sigma,
                                            const QuantumPermutation& tau);

// Entry family of one quantum permutation with duplicates removed.
[[nodiscard]] MatrixFamily entry_family(const QuantumPermutation& qp);

[[nodiscard]] IntertwinerBasis intertwiner_space(const QuantumPermutation& sigma,
                                                 const QuantumPermutation& tau,
                                                 const Tolerance& tol = {});

[[nodiscard]] bool is_irreducible(const QuantumPermutation& qp, const Tolerance& tol = {});
[[nodiscard]] bool is_irreducible(const MatrixFamily& family, std::size_t dim,
                                  const Tolerance& tol = {});

[[nodiscard]] std::optional<CMatrix> unitarily_equivalent(const QuantumPermutation& sigma,
                                                          const QuantumPermutation& tau,
                                                          const Tolerance& tol = {},
                                                          std::uint64_t seed = 0);

// Dimension of the unital algebra spanned by words of length <= max_length
// in the generators.
[[nodiscard]] std::size_t generated_algebra_dimension(const MatrixFamily& generators,
                                                      std::size_t max_length,
                                                      const Tolerance& tol = {});

}  // namespace qsym
