// Built with -mavx2; only entered after a runtime CPU check.
#include <immintrin.h>

#include "verlinde/kernels/modp.hpp"

namespace verlinde::kernels {

namespace {

// t < 2^32, mu = floor(2^32 / p): q = hi32(t * mu) undershoots t / p by at
// most one, so one conditional subtraction finishes.
inline __m256i barrett(__m256i t, __m256i mu, __m256i p) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, mu), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), mu);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t s, std::uint32_t p) {
  const std::uint32_t mu = static_cast<std::uint32_t>((std::uint64_t(1) << 32) / p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vmu = _mm256_set1_epi32(static_cast<int>(mu));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(x, vs));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(t, vmu, vp));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t(s) * src[i]) % p);
}

void scale_avx2(std::uint32_t* dst, std::size_t n, std::uint32_t s, std::uint32_t p) {
  const std::uint32_t mu = static_cast<std::uint32_t>((std::uint64_t(1) << 32) / p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vmu = _mm256_set1_epi32(static_cast<int>(mu));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(_mm256_mullo_epi32(d, vs), vmu, vp));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(std::uint64_t(s) * dst[i] % p);
}

}  // namespace

const ModpKernels* avx2_kernels() {
  static const ModpKernels k{"avx2", axpy_avx2, scale_avx2};
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &k : nullptr;
}

}  // namespace verlinde::kernels
