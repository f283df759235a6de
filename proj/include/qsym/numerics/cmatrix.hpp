#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsym {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Value type; the arithmetic operators route
// through the runtime-selected SIMD kernels.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix scalar(cplx value) { return {1, 1, {value}}; }
  // n x 1 column.
  static CMatrix column(std::span<const cplx> entries);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<cplx> data() noexcept { return data_; }
  [[nodiscard]] std::span<const cplx> data() const noexcept { return data_; }

  [[nodiscard]] CMatrix adjoint() const;
  [[nodiscard]] CMatrix transpose() const;
  [[nodiscard]] CMatrix conj() const;
  [[nodiscard]] cplx trace() const;
  [[nodiscard]] bool all_finite() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept;

  // Columns [first, first + count) as a rows() x count matrix.
  [[nodiscard]] CMatrix columns(std::size_t first, std::size_t count) const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(cplx s);
  // this += alpha * x
  CMatrix& add_scaled(cplx alpha, const CMatrix& x);

  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);

[[nodiscard]] double frobenius_norm(const CMatrix& a);
[[nodiscard]] double frobenius_distance(const CMatrix& a, const CMatrix& b);
// tr(a* b)
[[nodiscard]] cplx frobenius_inner(const CMatrix& a, const CMatrix& b);

// a (x) b with a as the outer factor.
[[nodiscard]] CMatrix kron(const CMatrix& a, const CMatrix& b);
[[nodiscard]] CMatrix kron(std::initializer_list<CMatrix> factors);
// Block diagonal [[a, 0], [0, b]].
[[nodiscard]] CMatrix block_diag(const CMatrix& a, const CMatrix& b);
[[nodiscard]] CMatrix commutator(const CMatrix& a, const CMatrix& b);

}  // namespace qsym
