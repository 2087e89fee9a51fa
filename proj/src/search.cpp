#include "boolcube/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace boolcube {

namespace {

void require_dim(CubeDim expected, CubeDim got) {
  if (expected != got) throw std::domain_error("truth table and search structure dimensions differ");
}

// Bits whose index has the stride bit clear, for strides 1, 2, ..., 32.
constexpr std::array<std::uint64_t, 6> kButterflyMask = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

std::optional<SearchHit> exhaustive_max(TruthTableView tt, SearchStats* stats) {
  const std::uint64_t size = tt.dim.size();
  int best_weight = -1;
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (test_bit(tt.words, i)) {
      const int w = std::popcount(i);
      if (w >= best_weight) {
        best_weight = w;
        best = i;
      }
    }
  }
  if (stats) stats->probes += size;
  if (best_weight < 0) return std::nullopt;
  return SearchHit{VecSerial(best, tt.dim), static_cast<unsigned>(best_weight)};
}

std::optional<SearchHit> wlo_search_max(TruthTableView tt, const WloSequence& seq,
                                        SearchStats* stats) {
  require_dim(seq.dim(), tt.dim);
  const auto order = seq.order();
  for (std::size_t i = order.size(); i-- > 0;) {
    const std::uint64_t k = order[i];
    if (test_bit(tt.words, k)) {
      if (stats) stats->probes += order.size() - i;
      return SearchHit{VecSerial(k, tt.dim), static_cast<unsigned>(std::popcount(k))};
    }
  }
  if (stats) stats->probes += order.size();
  return std::nullopt;
}

std::optional<SearchHit> wlo_search_min(TruthTableView tt, const WloSequence& seq,
                                        SearchStats* stats) {
  require_dim(seq.dim(), tt.dim);
  const auto order = seq.order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint64_t k = order[i];
    if (test_bit(tt.words, k)) {
      if (stats) stats->probes += i + 1;
      return SearchHit{VecSerial(k, tt.dim), static_cast<unsigned>(std::popcount(k))};
    }
  }
  if (stats) stats->probes += order.size();
  return std::nullopt;
}

std::optional<unsigned> bitwise_search_max(TruthTableView tt, const MaskSet& masks,
                                           SearchStats* stats) {
  require_dim(masks.dim(), tt.dim);
  const std::size_t cols = masks.words_per_mask();
  std::uint64_t ops = 0;
  for (unsigned row = tt.dim.n() + 1; row-- > 0;) {
    const auto m = masks.row(row);
    for (std::size_t col = 0; col < cols; ++col) {
      ++ops;
      if (tt.words[col] & m[col]) {
        if (stats) {
          stats->probes += ops;
          stats->rows += tt.dim.n() + 1 - row;
        }
        return row;
      }
    }
  }
  if (stats) {
    stats->probes += ops;
    stats->rows += tt.dim.n() + 1;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> layer_support(TruthTableView tt, const LayerMask& mask) {
  require_dim(mask.dim, tt.dim);
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < tt.words.size(); ++w) {
    for (std::uint64_t bits = tt.words[w] & mask.words[w]; bits; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

void mobius_transform_inplace(CubeDim dim, std::span<std::uint64_t> words) {
  if (words.size() != dim.word_count()) throw std::invalid_argument("word count does not match dimension");
  const unsigned in_word = std::min(dim.n(), 6u);
  for (auto& w : words) {
    for (unsigned s = 0; s < in_word; ++s) w ^= (w & kButterflyMask[s]) << (1u << s);
  }
  for (std::size_t stride = 1; stride < words.size(); stride <<= 1) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (!(j & stride)) words[j + stride] ^= words[j];
    }
  }
}

TruthTable mobius_transform(TruthTableView tt) {
  TruthTable out = TruthTable::from_words(tt.dim, tt.words);
  mobius_transform_inplace(tt.dim, out.mutable_words());
  return out;
}

std::optional<unsigned> algebraic_degree(TruthTableView anf, const MaskSet& masks) {
  return bitwise_search_max(anf, masks);
}

}  // namespace boolcube
