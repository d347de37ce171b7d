#pragma once

#include <cstdint>
#include <random>

namespace trireg {

// Deterministic RNG used throughout the search module. The 64-bit seed feeds
// std::mt19937_64 directly and bounded draws use rejection sampling, so a
// given seed produces the same stream on every platform. This seed-to-stream
// mapping is part of the external contract.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  /// Uniform draw from [0, n). n must be positive.
  uint64_t below(uint64_t n) {
    const uint64_t threshold = (-n) % n;  // 2^64 mod n
    uint64_t r = gen_();
    while (r < threshold) r = gen_();
    return r % n;
  }

  bool coin() { return gen_() & 1u; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace trireg
