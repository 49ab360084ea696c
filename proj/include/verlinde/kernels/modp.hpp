#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense mod-p vector kernels for p < 2^16. Entries are kept in [0, p).
namespace verlinde::kernels {

struct ModpKernels {
  const char* name;
  // dst[i] = (dst[i] + s * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p);
  // dst[i] = s * dst[i] mod p
  void (*scale)(std::uint32_t* dst, std::size_t n, std::uint32_t s, std::uint32_t p);
};

inline constexpr std::uint32_t kMaxPrime = 65521;

const ModpKernels& scalar_kernels();
// nullptr when the build or the CPU lacks AVX2
const ModpKernels* avx2_kernels();

// Chosen once: AVX2 when available unless VERLINDE_KERNELS=scalar.
const ModpKernels& active();

}  // namespace verlinde::kernels
