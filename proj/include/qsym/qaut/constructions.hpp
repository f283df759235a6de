#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsym/qaut/candidate.hpp"

namespace qsym {

// Coordinate projections of C(Z/k) (diagonal units) and the spectral
// projections of the cyclic shift (discrete Fourier projections).
[[nodiscard]] std::vector<CMatrix> coordinate_projections(std::size_t k);
[[nodiscard]] std::vector<CMatrix> fourier_projections(std::size_t k);

// Quantum automorphism of dimension k assembled from two disjoint
// finitely supported automorphisms: entries Σ p_r over 1 <= r <= k with
// σ^r(y) = x when σ moves y, likewise Σ q_s for τ, δ_xy·1 otherwise.
// Throws DomainError when σ, τ are not disjoint automorphisms of the graph
// or k exceeds either order.
[[nodiscard]] QAutCandidate disjoint_auto(const Permutation& sigma, const Permutation& tau, std::size_t k,
                                          GraphPtr graph, const Tolerance& tol = {});

// Greedy search for points v_1..v_a moved by σ such that σ^t fixes the
// tuple only for t = 0 mod k, 0 < t < k. nullopt when no tuple of length
// <= max_length is found.
[[nodiscard]] std::optional<std::vector<Id>> orbit_separating_tuple(const Permutation& sigma, std::size_t k,
                                                                    std::size_t max_length = 6);

// u_{(x1,y1),(x2,y2)} = u_{x1x2} ⊗ u_{y1y2} on product(kind, X, Y). A factor
// with a nontrivial partner must be finite. Throws DomainError when an input
// is not a quantum automorphism.
[[nodiscard]] QAutCandidate product_lift(const QAutCandidate& x, const QAutCandidate& y, ProductKind kind,
                                         const Tolerance& tol = {});

// Restriction of the embedding of ⊗_{k∈F} u^k into the weak power to a
// window: coordinates 0..max(F)+extra_coordinates, each ranging over every
// factor vertex (finite factor) or over the union of the family supports and
// the base point. The result has window scope.
[[nodiscard]] QAutCandidate weak_product_embed(const std::map<Id, QAutCandidate>& family, GraphPtr weak,
                                               std::size_t extra_coordinates = 0, const Tolerance& tol = {});

// Weak-product embedding on hamming:n composed with the coordinate
// permutation, on the window of coordinates touched by F or the permutation
// plus extra_coordinates.
[[nodiscard]] QAutCandidate hamming_wreath(const std::map<Id, QuantumPermutation>& family,
                                           const Permutation& coordinate_perm, Id n,
                                           std::size_t extra_coordinates = 0, const Tolerance& tol = {});

}  // namespace qsym
