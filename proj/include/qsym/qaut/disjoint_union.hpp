#pragma once

#include "qsym/qaut/candidate.hpp"
#include "qsym/wreath/magic.hpp"

namespace qsym {

// Wreath data (quantum automorphisms of X per copy, quantum permutation of
// the copies) -> quantum automorphism of union(X, copies):
// f(π)_{x_i, y_j} = (π_i)_{xy} π^I_{ij}. X must be connected; a moved copy
// needs X finite. Throws DomainError on invalid input.
[[nodiscard]] QAutCandidate du_forward(const MagicWreathCorep& pi, GraphPtr component, const Tolerance& tol = {});

// Inverse direction on union(X, copies):
// π^I_{ij} = Σ_v u_{x_i, v_j} (checked for every base vertex x in the window)
// and (π_i)_{xy} = Σ_j u_{x_i, y_j}. Trivial per-copy data are dropped.
// Throws DomainError on invalid input, ConsistencyError when the copy
// entries depend on the base vertex beyond eps_equal.
[[nodiscard]] MagicWreathCorep du_backward(const QAutCandidate& u, const Tolerance& tol = {});

}  // namespace qsym
