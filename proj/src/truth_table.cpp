#include "boolcube/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boolcube {

TruthTable TruthTable::from_words(CubeDim dim, std::span<const std::uint64_t> words) {
  if (words.size() != dim.word_count()) {
    throw std::invalid_argument("expected " + std::to_string(dim.word_count()) +
                                " words for n=" + std::to_string(dim.n()) + ", got " +
                                std::to_string(words.size()));
  }
  if (dim.n() < 6 && (words[0] & ~low_word_mask(dim)) != 0) {
    throw std::invalid_argument("bits above 2^n set in truth table word");
  }
  TruthTable tt(dim);
  std::copy(words.begin(), words.end(), tt.words_.begin());
  return tt;
}

TruthTable TruthTable::from_serials(CubeDim dim, std::initializer_list<std::uint64_t> serials) {
  return from_serials(dim, std::span<const std::uint64_t>(serials.begin(), serials.size()));
}

TruthTable TruthTable::from_serials(CubeDim dim, std::span<const std::uint64_t> serials) {
  TruthTable tt(dim);
  for (auto s : serials) tt.set(VecSerial(s, dim).value());
  return tt;
}

TruthTable TruthTable::from_bitstring(CubeDim dim, std::string_view bits) {
  if (bits.size() != dim.size()) {
    throw std::invalid_argument("bitstring has " + std::to_string(bits.size()) +
                                " characters, expected " + std::to_string(dim.size()));
  }
  TruthTable tt(dim);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') tt.set(i);
    else if (bits[i] != '0') throw std::invalid_argument("bitstring may only contain '0' and '1'");
  }
  return tt;
}

TruthTable TruthTable::all_ones(CubeDim dim) {
  TruthTable tt(dim);
  std::fill(tt.words_.begin(), tt.words_.end(), low_word_mask(dim));
  return tt;
}

void TruthTable::set(std::uint64_t i, bool value) {
  if (i >= dim_.size()) throw std::out_of_range("truth table index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value) words_[i >> 6] |= bit;
  else words_[i >> 6] &= ~bit;
}

std::string TruthTable::to_bitstring() const {
  std::string s(dim_.size(), '0');
  for (std::uint64_t i = 0; i < dim_.size(); ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

std::vector<std::uint64_t> TruthTable::support() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

}  // namespace boolcube
