#include "qsym/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QSYM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

#include <algorithm>

namespace qsym::simd {

#ifdef QSYM_HAVE_AVX2_KERNELS
namespace {

#define QSYM_AVX2 __attribute__((target("avx2,fma")))

// One __m256d holds two complex numbers: [re0, im0, re1, im1].

// alpha * v for a broadcast complex alpha.
QSYM_AVX2 inline __m256d cmul_bcast(__m256d alpha_re, __m256d alpha_im, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);  // [im0, re0, im1, re1]
  const __m256d t = _mm256_mul_pd(swapped, alpha_im);
  return _mm256_fmaddsub_pd(v, alpha_re, t);
}

QSYM_AVX2 void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const cplx* a,
                         const cplx* b, cplx* c) {
  std::fill(c, c + m * n, cplx{});
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const __m256d are = _mm256_set1_pd(aip.real());
      const __m256d aim = _mm256_set1_pd(aip.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, cmul_bcast(are, aim, bv)));
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += aip.real() * br - aip.imag() * bi;
        crow[2 * j + 1] += aip.real() * bi + aip.imag() * br;
      }
    }
  }
}

QSYM_AVX2 void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_bcast(are, aim, xv)));
  }
  for (; i < n; ++i) {
    yd[2 * i] += alpha.real() * xd[2 * i] - alpha.imag() * xd[2 * i + 1];
    yd[2 * i + 1] += alpha.real() * xd[2 * i + 1] + alpha.imag() * xd[2 * i];
  }
}

QSYM_AVX2 double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

QSYM_AVX2 double sq_dist_avx2(std::size_t n, const cplx* a, const cplx* b) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  const std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ad + i), _mm256_loadu_pd(bd + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double tail = 0.0;
  for (; i < len; ++i) {
    const double d = ad[i] - bd[i];
    tail += d * d;
  }
  return hsum(acc) + tail;
}

QSYM_AVX2 double sq_norm_avx2(std::size_t n, const cplx* a) {
  const double* ad = reinterpret_cast<const double*>(a);
  const std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d v = _mm256_loadu_pd(ad + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double tail = 0.0;
  for (; i < len; ++i) tail += ad[i] * ad[i];
  return hsum(acc) + tail;
}

#undef QSYM_AVX2

constexpr KernelTable kAvx2{"avx2", gemm_avx2, axpy_avx2, sq_dist_avx2, sq_norm_avx2};

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
  return nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace qsym::simd
