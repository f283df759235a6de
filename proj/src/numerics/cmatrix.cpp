#include "qsym/numerics/cmatrix.hpp"

#include <cmath>
#include <string>

#include "qsym/error.hpp"
#include "qsym/simd/kernels.hpp"

namespace qsym {
namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw ShapeError("CMatrix: " + std::to_string(data_.size()) + " entries for " +
                     std::to_string(rows) + "x" + std::to_string(cols));
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::column(std::span<const cplx> entries) {
  return {entries.size(), 1, std::vector<cplx>(entries.begin(), entries.end())};
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx CMatrix::trace() const {
  if (!is_square()) throw ShapeError("trace: non-square matrix");
  cplx t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool CMatrix::all_finite() const noexcept {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool CMatrix::is_zero() const noexcept {
  for (const auto& z : data_)
    if (z != cplx{}) return false;
  return true;
}

CMatrix CMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ShapeError("columns: range out of bounds");
  CMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  simd::active_kernels().axpy(data_.size(), 1.0, rhs.data_.data(), data_.data());
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  simd::active_kernels().axpy(data_.size(), -1.0, rhs.data_.data(), data_.data());
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix& CMatrix::add_scaled(cplx alpha, const CMatrix& x) {
  require_same_shape(*this, x, "add_scaled");
  simd::active_kernels().axpy(data_.size(), alpha, x.data_.data(), data_.data());
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= -1.0; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  CMatrix c(a.rows(), b.cols());
  simd::active_kernels().gemm(a.rows(), a.cols(), b.cols(), a.data().data(), b.data().data(),
                              c.data().data());
  return c;
}

double frobenius_norm(const CMatrix& a) {
  return std::sqrt(simd::active_kernels().sq_norm(a.size(), a.data().data()));
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  return std::sqrt(simd::active_kernels().sq_dist(a.size(), a.data().data(), b.data().data()));
}

cplx frobenius_inner(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "frobenius_inner");
  cplx acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a.data()[i]) * b.data()[i];
  return acc;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx s = a(i, j);
      if (s == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

CMatrix kron(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::scalar(1.0);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

}  // namespace qsym
