#pragma once

#include <cstdint>

namespace polyrig {

// splitmix64: tiny deterministic generator with identical output on every
// platform (std distributions are implementation-defined, so we avoid them).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // uniform integer in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
  return a;
}

template <class... Ts>
inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, Ts... rest) {
  return mix_key(mix_key(a, b), static_cast<std::uint64_t>(rest)...);
}

}  // namespace polyrig
