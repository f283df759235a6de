#include "qsym/simd/kernels.hpp"

#include <algorithm>

namespace qsym::simd {
namespace {

void gemm_scalar(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                 cplx* c) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        // Written out so the rounding matches the vector kernels.
        const double re = aip.real() * brow[j].real() - aip.imag() * brow[j].imag();
        const double im = aip.real() * brow[j].imag() + aip.imag() * brow[j].real();
        crow[j] += cplx(re, im);
      }
    }
  }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = alpha.real() * x[i].real() - alpha.imag() * x[i].imag();
    const double im = alpha.real() * x[i].imag() + alpha.imag() * x[i].real();
    y[i] += cplx(re, im);
  }
}

double sq_dist_scalar(std::size_t n, const cplx* a, const cplx* b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    acc += dr * dr + di * di;
  }
  return acc;
}

double sq_norm_scalar(std::size_t n, const cplx* a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return acc;
}

constexpr KernelTable kScalar{"scalar", gemm_scalar, axpy_scalar, sq_dist_scalar, sq_norm_scalar};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace qsym::simd
