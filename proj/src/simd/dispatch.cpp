#include <cstdlib>
#include <string_view>

#include "qsym/simd/kernels.hpp"

namespace qsym::simd {
namespace {

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("QSYM_SIMD"); env != nullptr && std::string_view(env) == "scalar")
    return scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace qsym::simd
