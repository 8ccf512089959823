#pragma once

// Deterministic random streams.
//
// Every trial of every experiment owns a private stream whose seed depends
// only on (master_seed, tag, trial_index):
//
//   mix64(z):  z += 0x9e3779b97f4a7c15
//              z  = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//              z  = (z ^ (z >> 27)) * 0x94d049bb133111eb
//              return z ^ (z >> 31)                     (SplitMix64 finalizer)
//
//   trial_seed = mix64(mix64(mix64(master_seed) ^ tag) ^ trial_index)
//
// The tag is the 64-bit FNV-1a hash of a cell label such as
// "det_square/n=5". The stream itself is std::mt19937_64 seeded with
// trial_seed; its output sequence is fixed by the C++ standard. Bounded
// integers come from rejection sampling on the raw 64-bit words.

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace randpoly {

constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t tag,
                                          std::uint64_t trial_index) {
  return mix64(mix64(mix64(master_seed) ^ tag) ^ trial_index);
}

inline constexpr std::uint64_t kDefaultMasterSeed = 0x5eed2013'0210'0001ULL;

class RandomStream {
 public:
  static constexpr std::string_view algorithm = "mt19937_64";

  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t tag,
                                std::uint64_t trial_index) {
    return RandomStream(derive_trial_seed(master_seed, tag, trial_index));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound). Rejects the top 2^64 mod bound raw values.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t excess = (kMax % bound + 1) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (excess == 0 || x <= kMax - excess) return x % bound;
    }
  }

  // Uniform in the closed range [low, high].
  std::int64_t uniform_int(std::int64_t low, std::int64_t high) {
    const auto span = static_cast<std::uint64_t>(high) - static_cast<std::uint64_t>(low);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(low) + uniform_below(span + 1));
  }

  // Pops bits from a buffered word, low bits first.
  unsigned bits(unsigned count) {
    if (available_ < count) {
      buffer_ = engine_();
      available_ = 64;
    }
    const unsigned out = static_cast<unsigned>(buffer_ & ((1ULL << count) - 1));
    buffer_ >>= count;
    available_ -= count;
    return out;
  }

  bool coin() { return bits(1) != 0; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
};

}  // namespace randpoly
