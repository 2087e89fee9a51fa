#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolcube/batch.hpp"
#include "boolcube/cube.hpp"

namespace boolcube {

// A file of raw little-endian 64-bit words with a text sidecar
// "<path>.meta" holding count, words_per_function and seed.
struct Corpus {
  std::filesystem::path path;
  std::uint64_t word_count = 0;
  std::uint64_t words_per_function = 0;
  std::uint64_t seed = 0;

  std::uint64_t function_count() const noexcept { return word_count / words_per_function; }
};

std::filesystem::path corpus_meta_path(const std::filesystem::path& corpus_path);

// Writes count * words_per_function SplitMix64 words. Same arguments, same
// bytes. Throws std::runtime_error on I/O failure.
Corpus gen_corpus(std::uint64_t count, std::uint64_t words_per_function, std::uint64_t seed,
                  const std::filesystem::path& path);

// Reads the sidecar and checks it against the file size.
Corpus open_corpus(const std::filesystem::path& path);
std::vector<std::uint64_t> read_corpus_words(const Corpus& corpus);

struct AlgorithmRun {
  Algorithm algorithm;
  double seconds = 0;
  std::uint64_t ops = 0;
  // histogram[w] = functions of maximal weight w; histogram[n + 1] counts
  // zero functions. Empty when parsed back from CSV.
  std::vector<std::uint64_t> histogram;
  std::vector<std::uint32_t> per_function_ops;
};

struct BenchReport {
  unsigned n = 0;
  std::uint64_t function_count = 0;
  std::vector<AlgorithmRun> runs;
};

// Loads the whole corpus, builds the WLO sequence and masks, then times each
// algorithm's single-threaded loop over all functions. I/O, precomputation
// and histogram bookkeeping are outside the timed region. Throws
// std::invalid_argument if the corpus layout does not match dim.
BenchReport run_bench(const Corpus& corpus, CubeDim dim, std::span<const Algorithm> algorithms);

bool histograms_agree(const BenchReport& report);
double median_ops(const AlgorithmRun& run);

// CSV with header "n,functions,algorithm,seconds,ops", one row per run.
std::string format_report_csv(const BenchReport& report);
BenchReport parse_report_csv(std::string_view csv);
void write_report(const BenchReport& report, const std::filesystem::path& path);

}  // namespace boolcube
