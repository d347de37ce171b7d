#include "trireg/kernels.hpp"

#if defined(TRIREG_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace trireg::kern::avx2 {
namespace {

// Per-byte popcount of a 256-bit lane via the nibble lookup trick, summed
// into four 64-bit lanes by SAD against zero.
inline __m256i popcount256(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t hsum64(__m256i acc) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

uint64_t popcount_words(const uint64_t* words, size_t count) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    acc = _mm256_add_epi64(acc, popcount256(v));
  }
  uint64_t total = hsum64(acc);
  for (; i < count; ++i) total += std::popcount(words[i]);
  return total;
}

uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t count) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
  }
  uint64_t total = hsum64(acc);
  for (; i < count; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace trireg::kern::avx2

#endif  // TRIREG_HAVE_AVX2
