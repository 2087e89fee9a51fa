#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolcube/bigcount.hpp"
#include "boolcube/cube.hpp"
#include "boolcube/truth_table.hpp"
#include "boolcube/wlo.hpp"

namespace boolcube {

// Characteristic vector m_{n,k} of layer k, in truth-table word layout.
// A view into the words owned by a MaskSet.
struct LayerMask {
  CubeDim dim;
  unsigned k;
  std::span<const std::uint64_t> words;

  operator TruthTableView() const noexcept { return {dim, words}; }
};

// All n + 1 layer masks, stored row-major: row k holds W = dim.word_count()
// words.
class MaskSet {
 public:
  MaskSet(CubeDim dim, std::vector<std::uint64_t> words) : dim_(dim), words_(std::move(words)) {}

  CubeDim dim() const noexcept { return dim_; }
  std::size_t words_per_mask() const noexcept { return dim_.word_count(); }
  std::size_t size() const noexcept { return dim_.n() + 1; }

  // Throws std::out_of_range if k > n.
  LayerMask mask(unsigned k) const;
  LayerMask operator[](unsigned k) const { return mask(k); }
  std::span<const std::uint64_t> row(unsigned k) const noexcept {
    return std::span<const std::uint64_t>(words_).subspan(k * words_per_mask(), words_per_mask());
  }

  friend bool operator==(const MaskSet&, const MaskSet&) = default;

 private:
  CubeDim dim_;
  std::vector<std::uint64_t> words_;
};

// Sets bit j of mask k for every j in l_{n,k}.
MaskSet masks_from_wlo(const WloSequence& seq);

// Builds the masks of r variables from those of r - 1: the low half of m_{r,k}
// is m_{r-1,k} and the high half is m_{r-1,k-1}. In-word shifts while the
// mask fits one word, whole-word block copies after that.
MaskSet masks_recursive(CubeDim dim);

// The 2^n-bit number whose most significant digit is coordinate 0, i.e. the
// reverse of the storage bit order.
BigCount mask_paper_serial(const LayerMask& mask);

// Throws std::domain_error on dimension mismatch.
bool mask_test(const LayerMask& mask, VecSerial serial);

}  // namespace boolcube
