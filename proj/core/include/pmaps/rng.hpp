#pragma once

#include <cstdint>
#include <limits>

namespace pmaps {

// Counter-based generator, stream id "pmaps-ctr64/v1".
//
// The n-th output is a pure function of (seed, stream, n), so replica
// streams can be derived up front and replayed independently of scheduling.
// The mixer is the splitmix64 finalizer over a Weyl sequence.
class Rng {
 public:
  static constexpr const char* kName = "pmaps-ctr64/v1";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(derive(seed, stream)), ctr_(0) {}

  std::uint64_t next_u64() {
    ctr_ += 0x9E3779B97F4A7C15ULL;
    return mix(key_ ^ ctr_);
  }

  // Exactly uniform over {0, ..., n-1} by bitmask rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = mask_for(n - 1);
    for (;;) {
      const std::uint64_t r = next_u64() & mask;
      if (r < n) return r;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double real53() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() >> 63) != 0; }

  // Independent child stream; child(i) streams are disjoint per index.
  Rng child(std::uint64_t index) const {
    Rng r(0);
    r.key_ = mix(mix(key_ + 0x8BB84B93962EACC9ULL * (index + 1)) ^ 0x2545F4914F6CDD1DULL);
    r.ctr_ = 0;
    return r;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0xD1B54A32D192ED03ULL));
  }
  static std::uint64_t mask_for(std::uint64_t v) {
    std::uint64_t m = v;
    m |= m >> 1; m |= m >> 2; m |= m >> 4;
    m |= m >> 8; m |= m >> 16; m |= m >> 32;
    return m;
  }

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace pmaps
