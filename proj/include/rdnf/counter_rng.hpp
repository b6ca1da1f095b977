#pragma once

#include <cstdint>

namespace rdnf {

// SplitMix64 output mixer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based generator: output i of stream s under key k is a pure function
// of (k, s, i), so any sample can be regenerated without replaying the others.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ 0x6A09E667F3BCC909ull) ^ mix64(stream + 0x3C6EF372FE94F82Bull)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return mix64(key_ + kGamma * ++counter_); }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rdnf
