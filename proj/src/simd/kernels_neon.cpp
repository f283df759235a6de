#include "qsym/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define QSYM_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#endif

#include <algorithm>

namespace qsym::simd {

#ifdef QSYM_HAVE_NEON_KERNELS
namespace {

// One float64x2_t holds one complex number.
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
  // (ar*br - ai*bi, ar*bi + ai*br)
  const float64x2_t ar = vdupq_laneq_f64(a, 0);
  const float64x2_t ai = vdupq_laneq_f64(a, 1);
  const float64x2_t bswap = vextq_f64(b, b, 1);  // [bi, br]
  const float64x2_t sign = {-1.0, 1.0};
  return vfmaq_f64(vmulq_f64(ar, b), vmulq_f64(ai, bswap), sign);
}

void gemm_neon(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
               cplx* c) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const float64x2_t av = vld1q_f64(reinterpret_cast<const double*>(&a[i * k + p]));
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t cv = vld1q_f64(crow + 2 * j);
        vst1q_f64(crow + 2 * j, vaddq_f64(cv, cmul(av, vld1q_f64(brow + 2 * j))));
      }
    }
  }
}

void axpy_neon(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const float64x2_t av = vld1q_f64(reinterpret_cast<const double*>(&alpha));
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t yv = vld1q_f64(yd + 2 * i);
    vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul(av, vld1q_f64(xd + 2 * i))));
  }
}

double sq_dist_neon(std::size_t n, const cplx* a, const cplx* b) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t d = vsubq_f64(vld1q_f64(ad + 2 * i), vld1q_f64(bd + 2 * i));
    acc = vfmaq_f64(acc, d, d);
  }
  return vaddvq_f64(acc);
}

double sq_norm_neon(std::size_t n, const cplx* a) {
  const double* ad = reinterpret_cast<const double*>(a);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(ad + 2 * i);
    acc = vfmaq_f64(acc, v, v);
  }
  return vaddvq_f64(acc);
}

constexpr KernelTable kNeon{"neon", gemm_neon, axpy_neon, sq_dist_neon, sq_norm_neon};

}  // namespace

const KernelTable* neon_kernels() noexcept { return &kNeon; }

#else

const KernelTable* neon_kernels() noexcept { return nullptr; }

#endif

}  // namespace qsym::simd
