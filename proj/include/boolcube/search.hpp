#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boolcube/cube.hpp"
#include "boolcube/masks.hpp"
#include "boolcube/truth_table.hpp"
#include "boolcube/wlo.hpp"

namespace boolcube {

struct SearchHit {
  VecSerial serial;
  unsigned weight;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Work counters filled by the search routines when requested.
//   probes: truth-table bits tested (exhaustive, WLO) or mask words ANDed (bitwise)
//   rows:   mask rows visited (bitwise only)
struct SearchStats {
  std::uint64_t probes = 0;
  unsigned rows = 0;
};

// Tests every coordinate. Among the heaviest support vectors returns the one
// with the greatest serial; nullopt for the zero function.
std::optional<SearchHit> exhaustive_max(TruthTableView tt, SearchStats* stats = nullptr);

// Walks l_n from its last element down and stops at the first set bit, which
// is the heaviest support vector with the greatest serial.
std::optional<SearchHit> wlo_search_max(TruthTableView tt, const WloSequence& seq,
                                        SearchStats* stats = nullptr);

// Walks l_n upward: lightest support vector, smallest serial.
std::optional<SearchHit> wlo_search_min(TruthTableView tt, const WloSequence& seq,
                                        SearchStats* stats = nullptr);

// ANDs the truth table against m_{n,n}, m_{n,n-1}, ... and returns the first
// layer with a nonzero intersection (the maximal weight).
std::optional<unsigned> bitwise_search_max(TruthTableView tt, const MaskSet& masks,
                                           SearchStats* stats = nullptr);

// Ascending serials of the set bits of tt AND mask.
std::vector<std::uint64_t> layer_support(TruthTableView tt, const LayerMask& mask);

// Binary Moebius transform over GF(2): truth table <-> ANF coefficients.
// It is its own inverse.
TruthTable mobius_transform(TruthTableView tt);
void mobius_transform_inplace(CubeDim dim, std::span<std::uint64_t> words);

// Largest weight of a monomial with nonzero coefficient; nullopt for the
// zero function.
std::optional<unsigned> algebraic_degree(TruthTableView anf, const MaskSet& masks);

}  // namespace boolcube
