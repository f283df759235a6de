#pragma once

// Dense complex kernels on interleaved (re, im) double storage.
//
// Every kernel has a portable scalar reference implementation. Vector
// variants (AVX2+FMA on x86-64, NEON on AArch64) are compiled alongside it
// and one table is selected at runtime; the equivalence tests pin every
// variant to the scalar reference.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qsym::simd {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // c = a * b; a is m x k, b is k x n, c is m x n, all row-major.
  // c must not alias a or b.
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
               cplx* c);

  // y += alpha * x over n elements.
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);

  // sum_i |a_i - b_i|^2
  double (*sq_dist)(std::size_t n, const cplx* a, const cplx* b);

  // sum_i |a_i|^2
  double (*sq_norm)(std::size_t n, const cplx* a);
};

const KernelTable& scalar_kernels() noexcept;

// Null when the variant was not compiled for this target or the running CPU
// lacks the instructions.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

// Table used by the library. Picks the widest supported variant on first
// call; QSYM_SIMD=scalar in the environment forces the reference kernels.
const KernelTable& active_kernels() noexcept;

}  // namespace qsym::simd
