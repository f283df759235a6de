#pragma once

#include <cstdint>
#include <vector>

#include "qsym/qperm/quantum_permutation.hpp"
#include "qsym/reptheory/intertwiner.hpp"

namespace qsym {

// One isotypic component. Every copy k satisfies
// isometries[k]* a isometries[k] = family element for each input element a,
// and the ranges of all isometries (over all components) are mutually
// orthogonal and fill the space.
struct FamilyComponent {
  MatrixFamily family;
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
  std::vector<CMatrix> isometries;  // input_dim x dim
};

// Splits a self-adjoint family (closed under * as a set of generators) into
// irreducibles, grouped up to unitary equivalence. Deterministic given seed.
[[nodiscard]] std::vector<FamilyComponent> decompose_family(const MatrixFamily& family,
                                                            std::size_t dim,
                                                            const Tolerance& tol = {},
                                                            std::uint64_t seed = 0);

struct Component {
  QuantumPermutation irreducible;
  std::size_t multiplicity = 0;
  std::vector<CMatrix> isometries;  // qp.dim() x irreducible.dim()
};

[[nodiscard]] std::vector<Component> decompose(const QuantumPermutation& qp,
                                               const Tolerance& tol = {}, std::uint64_t seed = 0);

// Direct sum of the components, each repeated by its multiplicity.
[[nodiscard]] QuantumPermutation reassemble(const std::vector<Component>& components);

// W* u W with W an isometry (dim x k); support unchanged.
[[nodiscard]] QuantumPermutation compress(const QuantumPermutation& qp, const CMatrix& isometry);

}  // namespace qsym
