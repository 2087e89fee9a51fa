#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace boolcube {

// Number of coordinates of the cube {0,1}^n. Every table in the library is
// Theta(2^n) in size, so n is capped at 30.
class CubeDim {
 public:
  static constexpr unsigned kMax = 30;

  explicit CubeDim(unsigned n);

  unsigned n() const noexcept { return n_; }
  // 2^n, the number of vectors.
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  // 64-bit words needed for a 2^n-bit vector (truth table or mask).
  std::size_t word_count() const noexcept {
    return n_ <= 6 ? 1 : std::size_t{1} << (n_ - 6);
  }

  friend bool operator==(CubeDim, CubeDim) = default;

 private:
  unsigned n_;
};

// A vector of the cube, identified by its serial number: the n-digit binary
// expansion a_1...a_n, a_1 most significant.
class VecSerial {
 public:
  VecSerial(std::uint64_t serial, CubeDim dim);

  std::uint64_t value() const noexcept { return serial_; }
  CubeDim dim() const noexcept { return dim_; }

  friend bool operator==(const VecSerial&, const VecSerial&) = default;

 private:
  std::uint64_t serial_;
  CubeDim dim_;
};

class WeightTable {
 public:
  WeightTable(CubeDim dim, std::vector<std::uint8_t> weights)
      : dim_(dim), weights_(std::move(weights)) {}

  CubeDim dim() const noexcept { return dim_; }
  std::uint8_t operator[](std::uint64_t serial) const { return weights_[serial]; }
  std::span<const std::uint8_t> weights() const noexcept { return weights_; }

 private:
  CubeDim dim_;
  std::vector<std::uint8_t> weights_;
};

struct Neighbors {
  std::vector<VecSerial> lower;  // one set bit cleared, layer k-1
  std::vector<VecSerial> upper;  // one clear bit set, layer k+1
};

unsigned weight_of(VecSerial v) noexcept;
// Throws std::domain_error when serial >= 2^n.
unsigned weight_of(std::uint64_t serial, CubeDim dim);

// Weights of all 2^n vectors in lexicographic order, built by doubling:
// the second half of each prefix is the first half plus one.
WeightTable build_weight_table(CubeDim dim);

// The functions below throw std::domain_error on mismatched dimensions.
unsigned hamming_distance(VecSerial a, VecSerial b);
// Coordinatewise a <= b.
bool precedes(VecSerial a, VecSerial b);
Neighbors adjacent_split(VecSerial v);

}  // namespace boolcube
