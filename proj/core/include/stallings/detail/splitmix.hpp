#ifndef STALLINGS_DETAIL_SPLITMIX_HPP
#define STALLINGS_DETAIL_SPLITMIX_HPP

#include <cstdint>

namespace stallings::detail {

// splitmix64 (Steele, Lea, Flood). Small, fast, and easy to re-derive,
// which keeps sampling reproducible across platforms and schedules.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

// Deterministic sub-stream derivation from (seed, index).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return mix.next();
}

}  // namespace stallings::detail

#endif
