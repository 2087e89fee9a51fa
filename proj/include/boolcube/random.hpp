#pragma once

#include <cstdint>
#include <span>

namespace boolcube {

// SplitMix64 (Steele, Lea, Flood). The n-th output depends only on the seed
// and n, so any chunk of the stream can be produced independently.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Output number `index` (0-based) of the generator seeded with `seed`.
  static constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix(seed + (index + 1) * kGamma);
  }

 private:
  std::uint64_t state_;
};

// out[i] = SplitMix64::at(seed, first_index + i).
void fill_random_words_serial(std::uint64_t seed, std::uint64_t first_index,
                              std::span<std::uint64_t> out);
void fill_random_words_parallel(std::uint64_t seed, std::uint64_t first_index,
                                std::span<std::uint64_t> out);

}  // namespace boolcube
