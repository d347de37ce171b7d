#include "trireg/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace trireg::kern {
namespace {

bool use_avx2() {
#if defined(TRIREG_HAVE_AVX2)
  const char* forced = std::getenv("TRIREG_KERNEL");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return false;
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const bool g_avx2 = use_avx2();

}  // namespace

#if defined(TRIREG_HAVE_AVX2)
const PopcountWordsFn popcount_words =
    g_avx2 ? avx2::popcount_words : scalar::popcount_words;
const AndPopcountFn and_popcount =
    g_avx2 ? avx2::and_popcount : scalar::and_popcount;
#else
const PopcountWordsFn popcount_words = scalar::popcount_words;
const AndPopcountFn and_popcount = scalar::and_popcount;
#endif

const char* active_kernel() { return g_avx2 ? "avx2" : "scalar"; }

}  // namespace trireg::kern
