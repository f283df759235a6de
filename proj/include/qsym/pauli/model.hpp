#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"
#include "qsym/pauli/rot3.hpp"

namespace qsym {

// t1 = [[i,0],[0,-i]], t2 = [[0,1],[-1,0]], t3 = [[0,-i],[-i,0]].
[[nodiscard]] const std::array<CMatrix, 3>& pauli_matrices();

// Evaluation representation at g: v_ij -> g_ij (t_i ⊗ t_j) on C^4.
struct EvalRep {
  Rot3 g;
  std::array<CMatrix, 9> v;  // row-major in (i, j)

  [[nodiscard]] const CMatrix& at(std::size_t i, std::size_t j) const { return v[3 * i + j]; }
  [[nodiscard]] std::vector<CMatrix> family() const { return {v.begin(), v.end()}; }
};

// Throws DomainError when g is not a rotation.
[[nodiscard]] EvalRep eval_rep(const Rot3& g);
// Same formula for any rational matrix (used to exhibit violations).
[[nodiscard]] EvalRep eval_rep_unchecked(const Rot3& g);

struct RelationReport {
  bool ok = true;
  std::string failure;  // first failing relation family
  double worst_residual = 0.0;
  double self_adjoint = 0.0;
  double anticommute = 0.0;
  double commute = 0.0;
  double orthogonal = 0.0;
  double s3_sum = 0.0;
};

// Self-adjointness, anticommutation within rows and columns, commutation
// across distinct rows and columns, vvᵀ = vᵀv = 1, and the S3 sum relation.
// Works for any 9-tuple of square matrices of equal size.
[[nodiscard]] RelationReport verify_relations(const std::vector<CMatrix>& v, const Tolerance& tol = {});
[[nodiscard]] inline RelationReport verify_relations(const EvalRep& r, const Tolerance& tol = {}) {
  return verify_relations(r.family(), tol);
}

struct IdentityDecomposition {
  std::array<CMatrix, 4> projections;  // p_k, rank one, summing to 1
  std::array<Rot3, 4> characters;      // p_k carries v -> d_k
};

[[nodiscard]] IdentityDecomposition decompose_identity_rep();

// D x D orbit {c g d⁻¹}, sorted ascending; canonical representative first.
[[nodiscard]] std::vector<Rot3> orbit(const Rot3& g);
[[nodiscard]] Rot3 canonical(const Rot3& g);
// |g_ij| = |h_ij| for all i, j.
[[nodiscard]] bool same_packet(const Rot3& g, const Rot3& h);

// Unitary U with U π_g(v_ij) = π_h(v_ij) U, built from t_i ⊗ 1 and 1 ⊗ t_j
// for h = c g d; nullopt when h is not in the orbit of g.
[[nodiscard]] std::optional<CMatrix> equiv_intertwiner(const Rot3& g, const Rot3& h);

struct FusionBlock {
  Rot3 product;      // g d_i h
  CMatrix isometry;  // 16 x 4 onto the range of 1 ⊗ p_i ⊗ 1
  std::vector<CMatrix> block;  // compressed generators
  double residual = 0.0;       // intertwining residual against π_{g d_i h}
  bool certified = false;
};

struct FusionResult {
  std::vector<CMatrix> tensor;  // (π_g ⊗ π_h)Δ(v_ij), 16 x 16
  std::array<FusionBlock, 4> blocks;
  std::size_t total_dim = 0;
  bool ok = false;
};

// Certifies each block against π_{g d_i h} by a unitary intertwiner with
// residual <= 1e-8.
[[nodiscard]] FusionResult fuse(const Rot3& g, const Rot3& h, const Tolerance& tol = {}, std::uint64_t seed = 1);

// Tensor of two representations of the v-relations: Σ_k a(v_ik) ⊗ b(v_kj).
[[nodiscard]] std::vector<CMatrix> fusion_tensor(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b);

struct Irreducible {
  Rot3 base;                   // the point it was realised over
  std::size_t dim = 0;
  std::vector<CMatrix> v;      // images of v_ij
  std::vector<cplx> fingerprint;  // traces of v_ij and of all products v_ij v_kl
};

[[nodiscard]] std::vector<cplx> trace_fingerprint(const std::vector<CMatrix>& v);
// Fingerprints agree at 1e-8 and a unitary intertwiner exists.
[[nodiscard]] bool equivalent(const Irreducible& a, const Irreducible& b, const Tolerance& tol = {},
                              std::uint64_t seed = 1);

// Distinct irreducible summands of π_g (at most 4).
[[nodiscard]] std::vector<Irreducible> packet_irreducibles(const Rot3& g, const Tolerance& tol = {},
                                                           std::uint64_t seed = 1);

// Matches the irreducibles of π_g with those of π_h (h in the orbit of g)
// one to one; nullopt when no bijection by equivalence exists.
[[nodiscard]] std::optional<std::vector<std::size_t>> cross_realise(const std::vector<Irreducible>& at_g,
                                                                    const std::vector<Irreducible>& at_h,
                                                                    const Tolerance& tol = {});

}  // namespace qsym
