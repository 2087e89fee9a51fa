#include "boolcube/wlo.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace boolcube {

namespace {

std::vector<std::uint32_t> offsets_for(const PascalTables& pt) {
  const unsigned n = pt.dim.n();
  std::vector<std::uint32_t> off(n + 2);
  for (unsigned k = 0; k <= n; ++k) off[k] = static_cast<std::uint32_t>(pt.subseq_begin[n][k]);
  off[n + 1] = static_cast<std::uint32_t>(pt.dim.size());
  return off;
}

}  // namespace

PascalTables build_pascal_tables(CubeDim dim) {
  const unsigned n = dim.n();
  PascalTables pt{dim, {}, {}};
  pt.binom.resize(n + 1);
  pt.subseq_begin.resize(n + 1);
  for (unsigned r = 0; r <= n; ++r) {
    auto& row = pt.binom[r];
    row.assign(r + 1, 1);
    for (unsigned c = 1; c < r; ++c) row[c] = pt.binom[r - 1][c - 1] + pt.binom[r - 1][c];
    auto& beg = pt.subseq_begin[r];
    beg.assign(r + 1, 0);
    for (unsigned c = 1; c <= r; ++c) beg[c] = beg[c - 1] + row[c - 1];
  }
  return pt;
}

std::span<const WloSequence::value_type> WloSequence::layer(unsigned k) const {
  if (k > dim_.n()) {
    throw std::out_of_range("layer " + std::to_string(k) + " out of range for n=" +
                            std::to_string(dim_.n()));
  }
  return std::span<const value_type>(order_).subspan(layer_offsets_[k],
                                                     layer_offsets_[k + 1] - layer_offsets_[k]);
}

WloSequence wlo_bucket(CubeDim dim) {
  const WeightTable wt = build_weight_table(dim);
  const PascalTables pt = build_pascal_tables(dim);
  std::vector<std::uint32_t> offsets = offsets_for(pt);

  // write cursor of every bucket, starting at the bucket's region
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<WloSequence::value_type> order(dim.size());
  const std::uint64_t size = dim.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    order[cursor[wt[i]]++] = static_cast<WloSequence::value_type>(i);
  }
  return WloSequence(dim, std::move(order), std::move(offsets));
}

WloSequence wlo_recursive(CubeDim dim) {
  const unsigned n = dim.n();
  const PascalTables pt = build_pascal_tables(dim);

  std::vector<WloSequence::value_type> prev(dim.size());
  std::vector<WloSequence::value_type> cur(dim.size());
  cur[0] = 0;
  cur[1] = 1;
  WloSequence::value_type add = 2;
  for (unsigned r = 2; r <= n; ++r) {
    std::swap(prev, cur);
    cur[0] = 0;
    std::size_t k = 1;
    for (unsigned c = 1; c <= r; ++c) {
      // copy l_{r-1,c}
      if (c <= r - 1) {
        const auto len = pt.binom[r - 1][c];
        const auto beg = pt.subseq_begin[r - 1][c];
        std::copy_n(prev.begin() + beg, len, cur.begin() + k);
        k += len;
      }
      // then l_{r-1,c-1} + 2^(r-1)
      const auto len = pt.binom[r - 1][c - 1];
      const auto beg = pt.subseq_begin[r - 1][c - 1];
      for (std::uint64_t j = 0; j < len; ++j) cur[k++] = prev[beg + j] + add;
    }
    add *= 2;
  }
  return WloSequence(dim, std::move(cur), offsets_for(pt));
}

void write_wlo_text(std::ostream& os, std::span<const WloSequence::value_type> serials) {
  for (auto s : serials) os << s << '\n';
}

}  // namespace boolcube
