// Compiled with -mavx2; only reached through the runtime dispatch table.

#include <immintrin.h>

#include "npb/kernels.hpp"

namespace npb::kernels::avx2 {

namespace {

inline __m256i load(const Index* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline std::size_t first_lane(__m256i neq_mask) {
  const auto bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(neq_mask)));
  return static_cast<std::size_t>(__builtin_ctz(bits));
}

}  // namespace

void gather(std::span<const Index> lookup, std::span<const Index> idx, std::span<Index> out) {
  const std::size_t n = idx.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_i32gather_epi32(lookup.data(), load(idx.data() + i), 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
  }
  for (; i < n; ++i) out[i] = lookup[static_cast<std::size_t>(idx[i])];
}

std::size_t mismatch(std::span<const Index> a, std::span<const Index> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i eq = _mm256_cmpeq_epi32(load(a.data() + i), load(b.data() + i));
    const __m256i neq = _mm256_xor_si256(eq, _mm256_set1_epi32(-1));
    if (!_mm256_testz_si256(neq, neq)) return i + first_lane(neq);
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

std::size_t gather_mismatch(std::span<const Index> lookup, std::span<const Index> idx,
                            std::span<const Index> expect) {
  const std::size_t n = idx.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_i32gather_epi32(lookup.data(), load(idx.data() + i), 4);
    const __m256i eq = _mm256_cmpeq_epi32(v, load(expect.data() + i));
    const __m256i neq = _mm256_xor_si256(eq, _mm256_set1_epi32(-1));
    if (!_mm256_testz_si256(neq, neq)) return i + first_lane(neq);
  }
  for (; i < n; ++i)
    if (lookup[static_cast<std::size_t>(idx[i])] != expect[i]) return i;
  return n;
}

std::size_t identity_mismatch(std::span<const Index> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    const __m256i eq = _mm256_cmpeq_epi32(load(a.data() + i), iota);
    const __m256i neq = _mm256_xor_si256(eq, _mm256_set1_epi32(-1));
    if (!_mm256_testz_si256(neq, neq)) return i + first_lane(neq);
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (a[i] != static_cast<Index>(i)) return i;
  return n;
}

}  // namespace npb::kernels::avx2
