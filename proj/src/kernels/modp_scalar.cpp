#include <cstdlib>
#include <cstring>

#include "verlinde/kernels/modp.hpp"

namespace verlinde::kernels {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(s) * src[i]) % p);
}

void scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(std::uint64_t(s) * dst[i] % p);
}

}  // namespace

const ModpKernels& scalar_kernels() {
  static const ModpKernels k{"scalar", axpy_scalar, scale_scalar};
  return k;
}

#ifndef VERLINDE_HAVE_AVX2
const ModpKernels* avx2_kernels() { return nullptr; }
#endif

const ModpKernels& active() {
  static const ModpKernels* chosen = [] {
    const char* env = std::getenv("VERLINDE_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    const ModpKernels* v = avx2_kernels();
    return v ? v : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace verlinde::kernels
