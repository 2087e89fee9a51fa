#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "boolcube/wlo.hpp"
#include "oracles.hpp"

using namespace boolcube;

namespace {

std::vector<std::uint32_t> to_vec(std::span<const std::uint32_t> s) { return {s.begin(), s.end()}; }

// Known orders for n = 1..4 and the start of n = 5.
const std::vector<std::vector<std::uint32_t>> kTable1 = {
    {0, 1},
    {0, 1, 2, 3},
    {0, 1, 2, 4, 3, 5, 6, 7},
    {0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15},
};
const std::vector<std::uint32_t> kTable1Row5Prefix = {0, 1, 2, 4, 8, 16, 3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 7};

void check_invariants(const WloSequence& seq) {
  const unsigned n = seq.dim().n();
  const auto order = seq.order();
  REQUIRE(order.size() == seq.dim().size());
  std::vector<bool> seen(order.size(), false);
  for (auto s : order) {
    REQUIRE(s < order.size());
    CHECK_FALSE(seen[s]);
    seen[s] = true;
  }
  REQUIRE(seq.layer_offsets().size() == n + 2);
  CHECK(seq.layer_offsets()[n + 1] == seq.dim().size());
  for (unsigned k = 0; k <= n; ++k) {
    const auto layer = seq.layer(k);
    CHECK(layer.size() == oracle::binomial(n, k));
    for (std::size_t i = 0; i < layer.size(); ++i) {
      CHECK(oracle::popcount(layer[i]) == k);
      if (i) CHECK(layer[i - 1] < layer[i]);
    }
  }
}

}  // namespace

TEST_SUITE("wlo") {

TEST_CASE("pascal tables") {
  const PascalTables p4 = build_pascal_tables(CubeDim(4));
  CHECK(p4.binom[4] == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  CHECK(p4.subseq_begin[4] == std::vector<std::uint64_t>{0, 1, 5, 11, 15});

  const PascalTables p1 = build_pascal_tables(CubeDim(1));
  CHECK(p1.binom[1] == std::vector<std::uint64_t>{1, 1});
  CHECK(p1.subseq_begin[1] == std::vector<std::uint64_t>{0, 1});

  const PascalTables p30 = build_pascal_tables(CubeDim(30));
  CHECK(p30.binom[30][15] == 155117520ULL);
  for (unsigned r = 0; r <= 30; ++r) {
    std::uint64_t sum = 0;
    for (auto c : p30.binom[r]) sum += c;
    CHECK(sum == (std::uint64_t{1} << r));
    for (unsigned c = 0; c <= r; ++c) CHECK(p30.binom[r][c] == oracle::binomial(r, c));
  }
}

TEST_CASE("both generators reproduce the known small orders") {
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(to_vec(wlo_bucket(CubeDim(n)).order()) == kTable1[n - 1]);
    CHECK(to_vec(wlo_recursive(CubeDim(n)).order()) == kTable1[n - 1]);
  }
  for (const auto& seq : {wlo_bucket(CubeDim(5)), wlo_recursive(CubeDim(5))}) {
    const auto order = seq.order();
    CHECK(std::vector<std::uint32_t>(order.begin(), order.begin() + 17) == kTable1Row5Prefix);
  }
}

TEST_CASE("recursive layer construction for n=3") {
  const WloSequence l3 = wlo_recursive(CubeDim(3));
  CHECK(to_vec(l3.layer(1)) == std::vector<std::uint32_t>{1, 2, 4});
}

TEST_CASE("layer slices") {
  const WloSequence l4 = wlo_bucket(CubeDim(4));
  CHECK(to_vec(layer_slice(l4, 2)) == std::vector<std::uint32_t>{3, 5, 6, 9, 10, 12});
  CHECK(to_vec(layer_slice(l4, 0)) == std::vector<std::uint32_t>{0});
  CHECK(to_vec(layer_slice(l4, 4)) == std::vector<std::uint32_t>{15});
  CHECK_THROWS_AS(layer_slice(l4, 5), std::out_of_range);
}

TEST_CASE("generators agree with each other and with a sort oracle, n <= 16") {
  for (unsigned n = 1; n <= 16; ++n) {
    const WloSequence a = wlo_bucket(CubeDim(n));
    const WloSequence b = wlo_recursive(CubeDim(n));
    const auto sorted = oracle::wlo_by_sort(n);
    CHECK_MESSAGE(to_vec(a.order()) == sorted, "bucket n=" << n);
    CHECK_MESSAGE(to_vec(b.order()) == sorted, "recursive n=" << n);
    CHECK(to_vec(a.layer_offsets()) == to_vec(b.layer_offsets()));
    check_invariants(a);
    // weights never decrease along the sequence
    bool monotone = true;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      monotone &= oracle::popcount(a.order()[i - 1]) <= oracle::popcount(a.order()[i]);
    }
    CHECK(monotone);
  }
}

TEST_CASE("text serialization") {
  std::ostringstream os;
  write_wlo_text(os, wlo_bucket(CubeDim(2)).order());
  CHECK(os.str() == "0\n1\n2\n3\n");
}

}  // TEST_SUITE
