#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "boolcube/cube.hpp"

namespace boolcube {

// Binomial coefficients C(r, c) for r <= n and the start offset of every
// layer inside l_r. Row r has r + 1 entries.
struct PascalTables {
  CubeDim dim;
  std::vector<std::vector<std::uint64_t>> binom;
  std::vector<std::vector<std::uint64_t>> subseq_begin;

  // C(r, c), zero when c > r.
  std::uint64_t choose(unsigned r, unsigned c) const { return c > r ? 0 : binom[r][c]; }
};

PascalTables build_pascal_tables(CubeDim dim);

// The weight-lexicographic order l_n of {0,1}^n: serials sorted by weight,
// ascending within each weight. Serials are stored as 32-bit values since
// n <= 30.
class WloSequence {
 public:
  using value_type = std::uint32_t;

  WloSequence(CubeDim dim, std::vector<value_type> order, std::vector<std::uint32_t> layer_offsets)
      : dim_(dim), order_(std::move(order)), layer_offsets_(std::move(layer_offsets)) {}

  CubeDim dim() const noexcept { return dim_; }
  std::span<const value_type> order() const noexcept { return order_; }
  // n + 2 entries; layer k occupies [offsets[k], offsets[k+1]).
  std::span<const std::uint32_t> layer_offsets() const noexcept { return layer_offsets_; }

  // The contiguous subsequence l_{n,k}. Throws std::out_of_range if k > n.
  std::span<const value_type> layer(unsigned k) const;

 private:
  CubeDim dim_;
  std::vector<value_type> order_;
  std::vector<std::uint32_t> layer_offsets_;
};

// Bucket construction: serials appended to the bucket of their weight in
// ascending order. Buckets are preallocated regions of one array.
WloSequence wlo_bucket(CubeDim dim);

// Builds l_1, l_2, ..., l_n where l_{r,k} is l_{r-1,k} followed by
// l_{r-1,k-1} + 2^(r-1). Uses two ping-pong buffers of 2^n entries.
WloSequence wlo_recursive(CubeDim dim);

inline std::span<const WloSequence::value_type> layer_slice(const WloSequence& seq, unsigned k) {
  return seq.layer(k);
}

// One decimal serial per line.
void write_wlo_text(std::ostream& os, std::span<const WloSequence::value_type> serials);

}  // namespace boolcube
