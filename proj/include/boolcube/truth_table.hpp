#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolcube/cube.hpp"

namespace boolcube {

// Bit i of a 2^n-bit vector lives in word i / 64 at position i % 64.
inline bool test_bit(std::span<const std::uint64_t> words, std::uint64_t i) noexcept {
  return (words[i >> 6] >> (i & 63)) & 1u;
}

// Non-owning view of a packed truth table (or ANF coefficient vector).
struct TruthTableView {
  CubeDim dim;
  std::span<const std::uint64_t> words;

  bool operator[](std::uint64_t i) const noexcept { return test_bit(words, i); }
};

// f as 2^n bits, bit i = f(alpha) with #alpha = i. When n < 6 the unused
// high bits of the single word are zero.
class TruthTable {
 public:
  explicit TruthTable(CubeDim dim) : dim_(dim), words_(dim.word_count(), 0) {}

  // Throws std::invalid_argument on wrong word count or stray high bits.
  static TruthTable from_words(CubeDim dim, std::span<const std::uint64_t> words);
  // Throws std::domain_error if a serial is out of range.
  static TruthTable from_serials(CubeDim dim, std::initializer_list<std::uint64_t> serials);
  static TruthTable from_serials(CubeDim dim, std::span<const std::uint64_t> serials);
  // 2^n characters '0'/'1', coordinate 0 first. Throws std::invalid_argument.
  static TruthTable from_bitstring(CubeDim dim, std::string_view bits);
  static TruthTable all_ones(CubeDim dim);

  CubeDim dim() const noexcept { return dim_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  bool operator[](std::uint64_t i) const noexcept { return test_bit(words_, i); }
  void set(std::uint64_t i, bool value = true);

  std::string to_bitstring() const;
  // Serials of set bits, ascending.
  std::vector<std::uint64_t> support() const;

  operator TruthTableView() const noexcept { return {dim_, words_}; }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  CubeDim dim_;
  std::vector<std::uint64_t> words_;
};

// Mask selecting the 2^n significant bits of a word when n < 6, else ~0.
inline std::uint64_t low_word_mask(CubeDim dim) noexcept {
  return dim.n() >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim.size()) - 1;
}

}  // namespace boolcube
