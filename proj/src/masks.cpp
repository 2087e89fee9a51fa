#include "boolcube/masks.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace boolcube {

LayerMask MaskSet::mask(unsigned k) const {
  if (k > dim_.n()) {
    throw std::out_of_range("mask " + std::to_string(k) + " out of range for n=" +
                            std::to_string(dim_.n()));
  }
  return LayerMask{dim_, k, row(k)};
}

MaskSet masks_from_wlo(const WloSequence& seq) {
  const CubeDim dim = seq.dim();
  const std::size_t w = dim.word_count();
  std::vector<std::uint64_t> words((dim.n() + 1) * w, 0);
  for (unsigned k = 0; k <= dim.n(); ++k) {
    std::uint64_t* row = words.data() + k * w;
    for (auto j : seq.layer(k)) row[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  return MaskSet(dim, std::move(words));
}

MaskSet masks_recursive(CubeDim dim) {
  const unsigned n = dim.n();
  const std::size_t w_final = dim.word_count();
  // rows are laid out with stride w_final in both buffers
  std::vector<std::uint64_t> prev((n + 1) * w_final, 0);
  std::vector<std::uint64_t> cur((n + 1) * w_final, 0);
  cur[0 * w_final] = 0b01;
  cur[1 * w_final] = 0b10;

  for (unsigned r = 2; r <= n; ++r) {
    std::swap(prev, cur);
    std::fill(cur.begin(), cur.end(), 0);
    if (r <= 6) {
      const unsigned half_bits = 1u << (r - 1);
      for (unsigned k = 0; k <= r; ++k) {
        const std::uint64_t low = k < r ? prev[k * w_final] : 0;
        const std::uint64_t high = k > 0 ? prev[(k - 1) * w_final] : 0;
        cur[k * w_final] = low | (high << half_bits);
      }
    } else {
      const std::size_t half_words = std::size_t{1} << (r - 7);
      for (unsigned k = 0; k <= r; ++k) {
        auto dst = cur.begin() + k * w_final;
        if (k < r) std::copy_n(prev.begin() + k * w_final, half_words, dst);
        if (k > 0) std::copy_n(prev.begin() + (k - 1) * w_final, half_words, dst + half_words);
      }
    }
  }
  return MaskSet(dim, std::move(cur));
}

BigCount mask_paper_serial(const LayerMask& mask) {
  const std::uint64_t size = mask.dim.size();
  BigCount value = 0;
  for (std::size_t w = 0; w < mask.words.size(); ++w) {
    for (std::uint64_t bits = mask.words[w]; bits; bits &= bits - 1) {
      const std::uint64_t i = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
      mpz_setbit(value.get_mpz_t(), size - 1 - i);
    }
  }
  return value;
}

bool mask_test(const LayerMask& mask, VecSerial serial) {
  if (serial.dim() != mask.dim) throw std::domain_error("mask and serial dimensions differ");
  return test_bit(mask.words, serial.value());
}

}  // namespace boolcube
