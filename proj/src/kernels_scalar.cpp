#include "trireg/kernels.hpp"

#include <bit>

namespace trireg::kern::scalar {

uint64_t popcount_words(const uint64_t* words, size_t count) {
  uint64_t total = 0;
  for (size_t i = 0; i < count; ++i) total += std::popcount(words[i]);
  return total;
}

uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t count) {
  uint64_t total = 0;
  for (size_t i = 0; i < count; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace trireg::kern::scalar
