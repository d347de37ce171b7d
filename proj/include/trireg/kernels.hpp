#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels behind the bit-packed adjacency rows. The scalar
// versions are the reference; the AVX2 versions must be bit-for-bit
// equivalent (enforced by tests) and are selected at runtime.

namespace trireg::kern {

using PopcountWordsFn = uint64_t (*)(const uint64_t*, size_t);
using AndPopcountFn = uint64_t (*)(const uint64_t*, const uint64_t*, size_t);

namespace scalar {
uint64_t popcount_words(const uint64_t* words, size_t count);
uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t count);
}  // namespace scalar

#if defined(TRIREG_HAVE_AVX2)
namespace avx2 {
uint64_t popcount_words(const uint64_t* words, size_t count);
uint64_t and_popcount(const uint64_t* a, const uint64_t* b, size_t count);
}  // namespace avx2
#endif

// Dispatched entry points, chosen once at startup: AVX2 when the CPU has it,
// scalar otherwise. Set TRIREG_KERNEL=scalar to force the reference path.
extern const PopcountWordsFn popcount_words;
extern const AndPopcountFn and_popcount;

const char* active_kernel();

}  // namespace trireg::kern
