#include "qsym/numerics/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "qsym/error.hpp"

namespace qsym {
namespace {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using ERowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const CMatrix& m) {
  return Eigen::Map<const ERowMat>(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                   static_cast<Eigen::Index>(m.cols()));
}

CMatrix from_eigen(const EMat& e) {
  CMatrix out(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  Eigen::Map<ERowMat>(out.data().data(), e.rows(), e.cols()) = e;
  return out;
}

void require_projection_pair(const CMatrix& p, const CMatrix& q, const Tolerance& tol,
                             const char* op) {
  if (p.rows() != q.rows() || !p.is_square() || !q.is_square())
    throw DomainError(std::string(op) + ": projections of different sizes");
  if (!is_projection(p, tol) || !is_projection(q, tol))
    throw DomainError(std::string(op) + ": argument is not a projection");
}

}  // namespace

bool is_projection(const CMatrix& m, const Tolerance& tol) {
  if (!m.is_square()) throw ShapeError("is_projection: non-square matrix");
  if (frobenius_distance(m, m.adjoint()) > tol.eps_proj) return false;
  return frobenius_distance(m * m, m) <= tol.eps_proj;
}

bool is_subprojection(const CMatrix& p, const CMatrix& q, const Tolerance& tol) {
  require_projection_pair(p, q, tol, "is_subprojection");
  return frobenius_distance(q * p, p) <= tol.eps_proj;
}

CMatrix projection_meet(const CMatrix& p, const CMatrix& q, const Tolerance& tol) {
  require_projection_pair(p, q, tol, "projection_meet");
  // range(p) ∩ range(q) = ker(1 - p) ∩ ker(1 - q)
  const std::size_t n = p.rows();
  const CMatrix one = CMatrix::identity(n);
  const CMatrix cp = one - p;
  const CMatrix cq = one - q;
  CMatrix stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      stacked(i, j) = cp(i, j);
      stacked(n + i, j) = cq(i, j);
    }
  // Singular values of the stacked complements lie in [0, sqrt(2)], so the
  // cutoff is absolute; a relative one would misread p = q = 1 + rounding.
  return projector_onto(nullspace_below(stacked, tol.eps_null));
}

CMatrix range_basis(const CMatrix& p) {
  const HermitianEigen eig = hermitian_eigen(p);
  std::size_t rank = 0;
  for (double v : eig.values)
    if (v > 0.5) ++rank;
  const std::size_t n = p.rows();
  return eig.vectors.columns(n - rank, rank);
}

CMatrix projector_onto(const CMatrix& v) { return v * v.adjoint(); }

Svd svd(const CMatrix& a) {
  const auto rows = static_cast<Eigen::Index>(a.rows());
  const auto cols = static_cast<Eigen::Index>(a.cols());
  Svd out;
  if (rows == 0 || cols == 0) {
    out.u = CMatrix(a.rows(), 0);
    out.v = CMatrix::identity(a.cols());
    return out;
  }
  const EMat e = to_eigen(a);
  if (rows > 2 * cols) {
    // Tall systems: reduce to the cols x cols triangular factor first.
    Eigen::HouseholderQR<EMat> qr(e);
    const EMat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    Eigen::BDCSVD<EMat> s(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const EMat q_thin = qr.householderQ() * EMat::Identity(rows, cols);
    out.u = from_eigen(q_thin * s.matrixU());
    out.v = from_eigen(s.matrixV());
    out.values.assign(s.singularValues().data(), s.singularValues().data() + cols);
    return out;
  }
  Eigen::BDCSVD<EMat> s(e, Eigen::ComputeThinU | Eigen::ComputeFullV);
  out.u = from_eigen(s.matrixU());
  out.v = from_eigen(s.matrixV());
  const auto k = s.singularValues().size();
  out.values.assign(s.singularValues().data(), s.singularValues().data() + k);
  return out;
}

HermitianEigen hermitian_eigen(const CMatrix& m) {
  if (!m.is_square()) throw ShapeError("hermitian_eigen: non-square matrix");
  HermitianEigen out;
  if (m.rows() == 0) return out;
  const EMat e = to_eigen(m);
  const EMat h = (e + e.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<EMat> solver(h);
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = from_eigen(solver.eigenvectors());
  return out;
}

namespace {

CMatrix trailing_right_vectors(const Svd& s, double cutoff) {
  std::size_t rank = 0;
  for (double v : s.values)
    if (v > cutoff) ++rank;
  return s.v.columns(rank, s.v.cols() - rank);
}

}  // namespace

CMatrix nullspace_below(const CMatrix& a, double cutoff) {
  if (a.rows() == 0 || a.is_zero()) return CMatrix::identity(a.cols());
  return trailing_right_vectors(svd(a), cutoff);
}

CMatrix nullspace_matrix(const CMatrix& a, const Tolerance& tol) {
  if (a.rows() == 0 || a.is_zero()) return CMatrix::identity(a.cols());
  const Svd s = svd(a);
  return trailing_right_vectors(s, tol.eps_null * s.values.front());
}

std::vector<CMatrix> nullspace_basis(const CMatrix& a, const Tolerance& tol) {
  const CMatrix basis = nullspace_matrix(a, tol);
  std::vector<CMatrix> out;
  out.reserve(basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(basis.columns(j, 1));
  return out;
}

std::size_t numerical_rank(const CMatrix& a, const Tolerance& tol) {
  return a.cols() - nullspace_matrix(a, tol).cols();
}

CMatrix polar_unitary(const CMatrix& a) {
  if (!a.is_square()) throw ShapeError("polar_unitary: non-square matrix");
  const Svd s = svd(a);
  return s.u * s.v.adjoint();
}

double unitarity_defect(const CMatrix& u) {
  return frobenius_distance(u.adjoint() * u, CMatrix::identity(u.cols()));
}

CMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix out(rows, cols);
  for (auto& z : out.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return out;
}

CMatrix random_unitary(std::size_t n, Rng& rng) {
  const EMat g = to_eigen(random_gaussian(n, n, rng));
  Eigen::HouseholderQR<EMat> qr(g);
  EMat q = qr.householderQ();
  // Fix column phases with diag(R) so the distribution does not depend on
  // the Householder sign convention.
  const EMat& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return from_eigen(q);
}

}  // namespace qsym
