#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "boolcube/masks.hpp"
#include "oracles.hpp"

using namespace boolcube;

namespace {

std::vector<std::uint64_t> set_bits(const LayerMask& m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < m.dim.size(); ++i) {
    if (test_bit(m.words, i)) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_SUITE("masks") {

TEST_CASE("masks_from_wlo examples") {
  const MaskSet m4 = masks_from_wlo(wlo_bucket(CubeDim(4)));
  CHECK(set_bits(m4[2]) == std::vector<std::uint64_t>{3, 5, 6, 9, 10, 12});
  CHECK(set_bits(m4[0]) == std::vector<std::uint64_t>{0});
  const MaskSet m3 = masks_from_wlo(wlo_bucket(CubeDim(3)));
  CHECK(set_bits(m3[1]) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK_THROWS_AS(m3.mask(4), std::out_of_range);
}

TEST_CASE("mask serials for n = 1..4") {
  const std::vector<std::vector<unsigned long>> known = {
      {2, 1}, {8, 6, 1}, {128, 104, 22, 1}, {32768, 26752, 5736, 278, 1}};
  for (unsigned n = 1; n <= 4; ++n) {
    const MaskSet rec = masks_recursive(CubeDim(n));
    const MaskSet from_wlo = masks_from_wlo(wlo_recursive(CubeDim(n)));
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(mask_paper_serial(rec[k]) == known[n - 1][k]);
      CHECK(mask_paper_serial(from_wlo[k]) == known[n - 1][k]);
    }
  }
  const MaskSet m1 = masks_recursive(CubeDim(1));
  CHECK(m1.row(0)[0] == 0b01);
  CHECK(m1.row(1)[0] == 0b10);
}

TEST_CASE("n=4 mask rows, coordinate 0 first") {
  const MaskSet m4 = masks_recursive(CubeDim(4));
  const std::vector<std::string> rows = {"1000000000000000", "0110100010000000", "0001011001101000",
                                           "0000000100010110", "0000000000000001"};
  for (unsigned k = 0; k <= 4; ++k) {
    std::string row;
    for (std::uint64_t i = 0; i < 16; ++i) row += test_bit(m4[k].words, i) ? '1' : '0';
    CHECK(row == rows[k]);
  }
}

TEST_CASE("mask_paper_serial of the top layer is 1") {
  for (unsigned n = 1; n <= 12; ++n) {
    const MaskSet ms = masks_recursive(CubeDim(n));
    CHECK(mask_paper_serial(ms[n]) == 1);
  }
}

TEST_CASE("mask_test") {
  const MaskSet m4 = masks_recursive(CubeDim(4));
  CHECK(mask_test(m4[2], VecSerial(12, CubeDim(4))));
  CHECK_FALSE(mask_test(m4[2], VecSerial(0, CubeDim(4))));
  const MaskSet m5 = masks_recursive(CubeDim(5));
  CHECK(mask_test(m5[3], VecSerial(7, CubeDim(5))));
  CHECK_THROWS_AS(mask_test(m4[2], VecSerial(7, CubeDim(5))), std::domain_error);
}

TEST_CASE("constructions agree with each other and a per-bit oracle, n <= 16") {
  for (unsigned n = 1; n <= 16; ++n) {
    const CubeDim dim(n);
    const MaskSet rec = masks_recursive(dim);
    const MaskSet from_wlo = masks_from_wlo(wlo_bucket(dim));
    CHECK_MESSAGE(rec == from_wlo, "n=" << n);

    const std::size_t w = dim.word_count();
    std::vector<std::uint64_t> union_words(w, 0);
    bool per_bit = true;
    bool disjoint = true;
    for (unsigned k = 0; k <= n; ++k) {
      const auto row = rec.row(k);
      std::uint64_t pop = 0;
      for (std::size_t j = 0; j < w; ++j) {
        pop += static_cast<std::uint64_t>(std::popcount(row[j]));
        disjoint &= (union_words[j] & row[j]) == 0;
        union_words[j] |= row[j];
      }
      CHECK(pop == oracle::binomial(n, k));
      for (std::uint64_t i = 0; i < dim.size(); ++i) {
        per_bit &= test_bit(row, i) == (oracle::popcount(i) == k);
      }
      if (n < 6) CHECK((row[0] & ~low_word_mask(dim)) == 0);
    }
    CHECK(per_bit);
    CHECK(disjoint);
    for (std::size_t j = 0; j < w; ++j) CHECK(union_words[j] == low_word_mask(dim));
  }
}

TEST_CASE("serial recursion identity, n <= 8") {
  for (unsigned n = 2; n <= 8; ++n) {
    const MaskSet cur = masks_recursive(CubeDim(n));
    const MaskSet prev = masks_recursive(CubeDim(n - 1));
    BigCount shift = 1;
    mpz_mul_2exp(shift.get_mpz_t(), shift.get_mpz_t(), 1u << (n - 1));
    for (unsigned i = 1; i < n; ++i) {
      const BigCount expected = shift * mask_paper_serial(prev[i]) + mask_paper_serial(prev[i - 1]);
      CHECK(mask_paper_serial(cur[i]) == expected);
    }
    CHECK(mask_paper_serial(cur[0]) == shift * mask_paper_serial(prev[0]));
  }
}

}  // TEST_SUITE
