#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "boolcube/subsets.hpp"
#include "oracles.hpp"

using namespace boolcube;

namespace {

SubsetUniverse letters(unsigned n) {
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return SubsetUniverse(std::move(labels));
}

std::vector<std::uint64_t> serials(const SubsetStream& stream) {
  std::vector<std::uint64_t> out;
  for (const SubsetHandle& h : stream) out.push_back(h.serial().value());
  return out;
}

std::vector<std::string> strs(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

}  // namespace

TEST_SUITE("subsets") {

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(SubsetUniverse({}), std::domain_error);
  CHECK_THROWS_AS(SubsetUniverse(strs({"a", "b", "a"})), std::domain_error);
  CHECK_THROWS_AS(letters(31), std::domain_error);
}

TEST_CASE("rank and unrank over six letters") {
  const SubsetUniverse u = letters(6);
  CHECK(rank(u, strs({"b", "c", "e"})).serial().value() == 26);
  CHECK(rank(u, std::vector<std::string>{}).serial().value() == 0);
  CHECK(rank(u, strs({"c", "a", "f", "d"})).serial().value() == 45);
  CHECK(unrank(u, 45) == strs({"a", "c", "d", "f"}));
  CHECK(unrank(u, 63) == u.elements());
  CHECK(unrank(u, 26) == strs({"b", "c", "e"}));
  CHECK_THROWS_AS(rank(u, strs({"z"})), std::domain_error);
  CHECK_THROWS_AS(unrank(u, 64), std::domain_error);
}

TEST_CASE("set operations") {
  const SubsetUniverse u = letters(6);
  const SubsetHandle x(u, 26), y(u, 45), empty(u, 0);
  CHECK(set_op(x, y, SetOp::intersection).serial().value() == 8);
  CHECK(unrank(set_op(x, y, SetOp::intersection)) == strs({"c"}));
  CHECK(set_op(x, empty, SetOp::union_) == x);
  CHECK(set_op(x, x, SetOp::symmetric_difference).serial().value() == 0);
  CHECK(set_op(x, y, SetOp::complement_of_a).serial().value() == (63 ^ 26));

  const SubsetUniverse other = letters(5);
  CHECK_THROWS_AS(set_op(x, SubsetHandle(other, 1), SetOp::union_), std::domain_error);
}

TEST_CASE("round trip, exhaustive n <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    const SubsetUniverse u = letters(n);
    bool ok = true;
    for (std::uint64_t s = 0; s < u.dim().size(); ++s) {
      const auto members = unrank(u, s);
      ok &= rank(u, members).serial().value() == s;
      ok &= unrank(u, rank(u, members).serial().value()) == members;
    }
    CHECK_MESSAGE(ok, "n=" << n);
  }
}

TEST_CASE("bitwise operations mirror set operations") {
  std::mt19937_64 rng(5);
  for (unsigned n = 1; n <= 12; ++n) {
    const SubsetUniverse u = letters(n);
    for (int t = 0; t < 200; ++t) {
      const SubsetHandle a(u, rng() % u.dim().size()), b(u, rng() % u.dim().size());
      const auto sa = unrank(a), sb = unrank(b);
      const std::set<std::string> A(sa.begin(), sa.end()), B(sb.begin(), sb.end());
      std::set<std::string> expect;
      std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::inserter(expect, expect.end()));
      auto got = unrank(set_op(a, b, SetOp::union_));
      CHECK(std::set<std::string>(got.begin(), got.end()) == expect);

      expect.clear();
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::inserter(expect, expect.end()));
      got = unrank(set_op(a, b, SetOp::intersection));
      CHECK(std::set<std::string>(got.begin(), got.end()) == expect);

      expect.clear();
      std::set_symmetric_difference(A.begin(), A.end(), B.begin(), B.end(),
                                    std::inserter(expect, expect.end()));
      got = unrank(set_op(a, b, SetOp::symmetric_difference));
      CHECK(std::set<std::string>(got.begin(), got.end()) == expect);

      expect.clear();
      for (const auto& e : u.elements()) {
        if (!A.count(e)) expect.insert(e);
      }
      got = unrank(set_op(a, b, SetOp::complement_of_a));
      CHECK(std::set<std::string>(got.begin(), got.end()) == expect);
    }
  }
}

TEST_CASE("inclusion corresponds to precedes, all pairs n <= 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    const SubsetUniverse u = letters(n);
    bool ok = true;
    for (std::uint64_t a = 0; a < u.dim().size(); ++a) {
      const auto sa = unrank(u, a);
      for (std::uint64_t b = 0; b < u.dim().size(); ++b) {
        const auto sb = unrank(u, b);
        const bool subset = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end(),
                                          [&](const std::string& x, const std::string& y) {
                                            return u.position_of(x) < u.position_of(y);
                                          });
        ok &= subset == precedes(rank(u, sa).serial(), rank(u, sb).serial());
      }
    }
    CHECK_MESSAGE(ok, "n=" << n);
  }
}

TEST_CASE("cardinality order") {
  const SubsetUniverse abc = letters(3);
  CHECK(serials(subsets_in_cardinality_order(abc)) == std::vector<std::uint64_t>{0, 1, 2, 4, 3, 5, 6, 7});
  std::vector<std::string> rendered;
  for (const SubsetHandle& h : subsets_in_cardinality_order(abc)) rendered.push_back(format_subset(unrank(h)));
  CHECK(rendered == strs({"", "c", "b", "a", "b,c", "a,c", "a,b", "a,b,c"}));

  CHECK(serials(subsets_in_cardinality_order(letters(1))) == std::vector<std::uint64_t>{0, 1});

  const SubsetUniverse u7 = letters(7);
  const auto all = serials(subsets_in_cardinality_order(u7));
  for (std::size_t i = 1; i <= 7; ++i) CHECK(oracle::popcount(all[i]) == 1);
}

TEST_CASE("materialized and streamed orders agree") {
  for (unsigned n = 1; n <= 12; ++n) {
    const SubsetUniverse u = letters(n);
    const auto a = serials(SubsetStream(u, 0, n, true));
    const auto b = serials(SubsetStream(u, 0, n, false));
    CHECK(a == b);
    CHECK(a.size() == u.dim().size());
    CHECK(std::set<std::uint64_t>(a.begin(), a.end()).size() == a.size());
    bool monotone = true;
    for (std::size_t i = 1; i < a.size(); ++i) monotone &= oracle::popcount(a[i - 1]) <= oracle::popcount(a[i]);
    CHECK(monotone);
    const WloSequence seq = wlo_bucket(u.dim());
    for (unsigned k = 0; k <= n; ++k) {
      const auto lay = seq.layer(k);
      CHECK(serials(SubsetStream(u, k, k, false)) == std::vector<std::uint64_t>(lay.begin(), lay.end()));
    }
  }
}

TEST_CASE("k_subsets") {
  const SubsetUniverse abcd = letters(4);
  CHECK(serials(k_subsets(abcd, 2)) == std::vector<std::uint64_t>{3, 5, 6, 9, 10, 12});
  CHECK(serials(k_subsets(abcd, 0)) == std::vector<std::uint64_t>{0});
  CHECK(serials(k_subsets(abcd, 4)) == std::vector<std::uint64_t>{15});
  CHECK_THROWS_AS(k_subsets(abcd, 5), std::out_of_range);

  // above the materialization limit nothing of size 2^n is built
  const SubsetUniverse big = letters(26);
  const SubsetStream pairs = k_subsets(big, 2);
  CHECK_FALSE(pairs.materialized());
  const auto s = serials(pairs);
  CHECK(s.size() == oracle::binomial(26, 2));
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(s.front() == 3);
  CHECK(s.back() == (std::uint64_t{3} << 24));
}

}  // TEST_SUITE
