#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "boolcube/masks.hpp"
#include "boolcube/search.hpp"
#include "boolcube/wlo.hpp"

namespace boolcube {

enum class Algorithm { exhaustive, wlo, bitwise };

std::string_view algorithm_name(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

// Everything the three searches need for one dimension, built once.
struct SearchContext {
  CubeDim dim;
  WloSequence seq;
  MaskSet masks;

  static SearchContext build(CubeDim dim);
};

// Batch kernels over a corpus of functions stored back to back, each
// dim.word_count() words. weights[i] receives the maximal weight of function
// i (-1 for the zero function), ops[i] its probe count. Words of a function
// with n < 6 must have the bits above 2^n cleared.
//
// The serial versions are the reference; the parallel versions split the
// function range across OpenMP threads and must produce identical output.
void batch_max_weight_serial(const SearchContext& ctx, Algorithm algo,
                             std::span<const std::uint64_t> corpus, std::span<std::int8_t> weights,
                             std::span<std::uint32_t> ops);
void batch_max_weight_parallel(const SearchContext& ctx, Algorithm algo,
                               std::span<const std::uint64_t> corpus,
                               std::span<std::int8_t> weights, std::span<std::uint32_t> ops);

// Algebraic degree of every function of the corpus (truth tables), via the
// Moebius transform and the bitwise search. -1 for the zero function.
void batch_degree_serial(const SearchContext& ctx, std::span<const std::uint64_t> corpus,
                         std::span<std::int8_t> degrees);
void batch_degree_parallel(const SearchContext& ctx, std::span<const std::uint64_t> corpus,
                           std::span<std::int8_t> degrees);

}  // namespace boolcube
