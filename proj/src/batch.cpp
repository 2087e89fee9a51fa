#include "boolcube/batch.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "boolcube/random.hpp"

namespace boolcube {

namespace {

std::size_t function_count(const SearchContext& ctx, std::span<const std::uint64_t> corpus) {
  const std::size_t w = ctx.dim.word_count();
  if (corpus.size() % w != 0) {
    throw std::invalid_argument("corpus size is not a multiple of the words per function");
  }
  return corpus.size() / w;
}

void check_outputs(std::size_t count, std::size_t a, std::size_t b) {
  if (a != count || b != count) throw std::invalid_argument("output spans must hold one entry per function");
}

inline void search_one(const SearchContext& ctx, Algorithm algo, std::span<const std::uint64_t> words,
                       std::int8_t& weight, std::uint32_t& ops) {
  const TruthTableView tt{ctx.dim, words};
  SearchStats stats;
  int w = -1;
  switch (algo) {
    case Algorithm::exhaustive:
      if (auto hit = exhaustive_max(tt, &stats)) w = static_cast<int>(hit->weight);
      break;
    case Algorithm::wlo:
      if (auto hit = wlo_search_max(tt, ctx.seq, &stats)) w = static_cast<int>(hit->weight);
      break;
    case Algorithm::bitwise:
      if (auto row = bitwise_search_max(tt, ctx.masks, &stats)) w = static_cast<int>(*row);
      break;
  }
  weight = static_cast<std::int8_t>(w);
  ops = static_cast<std::uint32_t>(stats.probes);
}

inline std::int8_t degree_one(const SearchContext& ctx, std::span<const std::uint64_t> words,
                              std::vector<std::uint64_t>& scratch) {
  std::copy(words.begin(), words.end(), scratch.begin());
  mobius_transform_inplace(ctx.dim, scratch);
  const auto d = bitwise_search_max(TruthTableView{ctx.dim, scratch}, ctx.masks);
  return d ? static_cast<std::int8_t>(*d) : std::int8_t{-1};
}

}  // namespace

std::string_view algorithm_name(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::exhaustive: return "exhaustive";
    case Algorithm::wlo: return "wlo";
    case Algorithm::bitwise: return "bitwise";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "exhaustive") return Algorithm::exhaustive;
  if (name == "wlo") return Algorithm::wlo;
  if (name == "bitwise") return Algorithm::bitwise;
  return std::nullopt;
}

SearchContext SearchContext::build(CubeDim dim) {
  WloSequence seq = wlo_recursive(dim);
  MaskSet masks = masks_recursive(dim);
  return SearchContext{dim, std::move(seq), std::move(masks)};
}

void batch_max_weight_serial(const SearchContext& ctx, Algorithm algo,
                             std::span<const std::uint64_t> corpus, std::span<std::int8_t> weights,
                             std::span<std::uint32_t> ops) {
  const std::size_t count = function_count(ctx, corpus);
  check_outputs(count, weights.size(), ops.size());
  const std::size_t w = ctx.dim.word_count();
  for (std::size_t i = 0; i < count; ++i) {
    search_one(ctx, algo, corpus.subspan(i * w, w), weights[i], ops[i]);
  }
}

void batch_max_weight_parallel(const SearchContext& ctx, Algorithm algo,
                               std::span<const std::uint64_t> corpus,
                               std::span<std::int8_t> weights, std::span<std::uint32_t> ops) {
  const std::size_t count = function_count(ctx, corpus);
  check_outputs(count, weights.size(), ops.size());
  const std::size_t w = ctx.dim.word_count();
  const auto signed_count = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < signed_count; ++i) {
    const auto u = static_cast<std::size_t>(i);
    search_one(ctx, algo, corpus.subspan(u * w, w), weights[u], ops[u]);
  }
}

void batch_degree_serial(const SearchContext& ctx, std::span<const std::uint64_t> corpus,
                         std::span<std::int8_t> degrees) {
  const std::size_t count = function_count(ctx, corpus);
  check_outputs(count, degrees.size(), count);
  const std::size_t w = ctx.dim.word_count();
  std::vector<std::uint64_t> scratch(w);
  for (std::size_t i = 0; i < count; ++i) degrees[i] = degree_one(ctx, corpus.subspan(i * w, w), scratch);
}

void batch_degree_parallel(const SearchContext& ctx, std::span<const std::uint64_t> corpus,
                           std::span<std::int8_t> degrees) {
  const std::size_t count = function_count(ctx, corpus);
  check_outputs(count, degrees.size(), count);
  const std::size_t w = ctx.dim.word_count();
  const auto signed_count = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::vector<std::uint64_t> scratch(w);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < signed_count; ++i) {
      const auto u = static_cast<std::size_t>(i);
      degrees[u] = degree_one(ctx, corpus.subspan(u * w, w), scratch);
    }
  }
}

void fill_random_words_serial(std::uint64_t seed, std::uint64_t first_index,
                              std::span<std::uint64_t> out) {
  SplitMix64 rng(seed + first_index * SplitMix64::kGamma);
  for (auto& word : out) word = rng.next();
}

void fill_random_words_parallel(std::uint64_t seed, std::uint64_t first_index,
                                std::span<std::uint64_t> out) {
  const auto size = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    out[static_cast<std::size_t>(i)] = SplitMix64::at(seed, first_index + static_cast<std::uint64_t>(i));
  }
}

}  // namespace boolcube
