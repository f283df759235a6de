#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"

namespace qsym {

// ---- projections -----------------------------------------------------------

// ||M^2 - M|| <= eps_proj and ||M - M*|| <= eps_proj. Throws ShapeError on
// non-square input.
[[nodiscard]] bool is_projection(const CMatrix& m, const Tolerance& tol);

// q p = p, i.e. range(p) inside range(q). Throws DomainError unless both are
// projections of equal size.
[[nodiscard]] bool is_subprojection(const CMatrix& p, const CMatrix& q, const Tolerance& tol);

// Orthogonal projection onto range(p) ∩ range(q).
[[nodiscard]] CMatrix projection_meet(const CMatrix& p, const CMatrix& q, const Tolerance& tol);

// Orthonormal columns spanning range(p) for a projection p (rank by trace).
[[nodiscard]] CMatrix range_basis(const CMatrix& p);

// V V* for a matrix with orthonormal columns.
[[nodiscard]] CMatrix projector_onto(const CMatrix& orthonormal_columns);

// ---- decompositions ---------------------------------------------------------

struct Svd {
  CMatrix u;                    // rows x min(rows, cols)
  std::vector<double> values;   // descending, min(rows, cols) entries
  CMatrix v;                    // cols x cols (full)
};

[[nodiscard]] Svd svd(const CMatrix& a);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

// Eigen-decomposition of the Hermitian part (M + M*)/2.
[[nodiscard]] HermitianEigen hermitian_eigen(const CMatrix& m);

// Orthonormal nullspace basis as the columns of a cols x k matrix. Singular
// values at or below eps_null * sigma_max count as zero.
[[nodiscard]] CMatrix nullspace_matrix(const CMatrix& a, const Tolerance& tol);

// Nullspace with an absolute singular-value cutoff.
[[nodiscard]] CMatrix nullspace_below(const CMatrix& a, double cutoff);

// Same basis split into column vectors.
[[nodiscard]] std::vector<CMatrix> nullspace_basis(const CMatrix& a, const Tolerance& tol);

[[nodiscard]] std::size_t numerical_rank(const CMatrix& a, const Tolerance& tol);

// Unitary factor W V* of the polar decomposition of a square matrix.
[[nodiscard]] CMatrix polar_unitary(const CMatrix& a);

// ||U* U - 1||_F
[[nodiscard]] double unitarity_defect(const CMatrix& u);

// ---- seeded randomness -------------------------------------------------------

using Rng = std::mt19937_64;

[[nodiscard]] CMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);
// Haar-ish unitary from the QR of a complex Gaussian matrix.
[[nodiscard]] CMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace qsym
