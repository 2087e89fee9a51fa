#include "boolcube/bench.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "boolcube/random.hpp"

namespace boolcube {

namespace {

constexpr std::size_t kChunkWords = std::size_t{1} << 20;
constexpr std::string_view kCsvHeader = "n,functions,algorithm,seconds,ops";

std::uint64_t to_little_endian(std::uint64_t w) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap64(w);
  return w;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::filesystem::path corpus_meta_path(const std::filesystem::path& corpus_path) {
  std::filesystem::path meta = corpus_path;
  meta += ".meta";
  return meta;
}

Corpus gen_corpus(std::uint64_t count, std::uint64_t words_per_function, std::uint64_t seed,
                  const std::filesystem::path& path) {
  if (count == 0 || words_per_function == 0) {
    throw std::invalid_argument("count and words_per_function must be positive");
  }
  const std::uint64_t total = count * words_per_function;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open corpus file " + path.string());

  std::vector<std::uint64_t> chunk;
  for (std::uint64_t first = 0; first < total; first += kChunkWords) {
    chunk.resize(static_cast<std::size_t>(std::min<std::uint64_t>(kChunkWords, total - first)));
    fill_random_words_parallel(seed, first, chunk);
    for (auto& w : chunk) w = to_little_endian(w);
    out.write(reinterpret_cast<const char*>(chunk.data()),
              static_cast<std::streamsize>(chunk.size() * sizeof(std::uint64_t)));
  }
  out.close();
  if (!out) throw std::runtime_error("failed writing corpus file " + path.string());

  std::ofstream meta(corpus_meta_path(path), std::ios::trunc);
  meta << "count=" << count << "\nwords_per_function=" << words_per_function << "\nseed=" << seed
       << "\n";
  if (!meta) throw std::runtime_error("failed writing corpus metadata for " + path.string());
  return Corpus{path, total, words_per_function, seed};
}

Corpus open_corpus(const std::filesystem::path& path) {
  std::ifstream meta(corpus_meta_path(path));
  if (!meta) throw std::runtime_error("missing corpus metadata " + corpus_meta_path(path).string());
  std::uint64_t count = 0;
  Corpus c{path, 0, 0, 0};
  std::string line;
  while (std::getline(meta, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string_view key = std::string_view(line).substr(0, eq);
    const std::string_view val = std::string_view(line).substr(eq + 1);
    if (key == "count") count = parse_u64(val, key);
    else if (key == "words_per_function") c.words_per_function = parse_u64(val, key);
    else if (key == "seed") c.seed = parse_u64(val, key);
  }
  if (count == 0 || c.words_per_function == 0) {
    throw std::runtime_error("incomplete corpus metadata for " + path.string());
  }
  c.word_count = count * c.words_per_function;
  std::error_code ec;
  const auto bytes = std::filesystem::file_size(path, ec);
  if (ec) throw std::runtime_error("cannot stat corpus " + path.string());
  if (bytes != 8 * c.word_count) {
    throw std::runtime_error("corpus " + path.string() + " has " + std::to_string(bytes) +
                             " bytes, metadata implies " + std::to_string(8 * c.word_count));
  }
  return c;
}

std::vector<std::uint64_t> read_corpus_words(const Corpus& corpus) {
  std::ifstream in(corpus.path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus " + corpus.path.string());
  std::vector<std::uint64_t> words(corpus.word_count);
  in.read(reinterpret_cast<char*>(words.data()),
          static_cast<std::streamsize>(words.size() * sizeof(std::uint64_t)));
  if (!in) throw std::runtime_error("short read from corpus " + corpus.path.string());
  for (auto& w : words) w = to_little_endian(w);
  return words;
}

BenchReport run_bench(const Corpus& corpus, CubeDim dim, std::span<const Algorithm> algorithms) {
  BenchReport report;
  report.n = dim.n();
  if (algorithms.empty()) return report;
  if (corpus.words_per_function != dim.word_count()) {
    throw std::invalid_argument("corpus has " + std::to_string(corpus.words_per_function) +
                                " words per function, n=" + std::to_string(dim.n()) + " needs " +
                                std::to_string(dim.word_count()));
  }
  std::vector<std::uint64_t> words = read_corpus_words(corpus);
  if (dim.n() < 6) {
    const std::uint64_t keep = low_word_mask(dim);
    for (auto& w : words) w &= keep;
  }
  const std::size_t count = words.size() / dim.word_count();
  report.function_count = count;
  const SearchContext ctx = SearchContext::build(dim);

  std::vector<std::int8_t> weights(count);
  for (Algorithm algo : algorithms) {
    AlgorithmRun run{algo, 0, 0, {}, std::vector<std::uint32_t>(count)};
    const auto start = std::chrono::steady_clock::now();
    batch_max_weight_serial(ctx, algo, words, weights, run.per_function_ops);
    const auto stop = std::chrono::steady_clock::now();
    run.seconds = std::chrono::duration<double>(stop - start).count();

    run.histogram.assign(dim.n() + 2, 0);
    for (std::size_t i = 0; i < count; ++i) {
      ++run.histogram[weights[i] < 0 ? dim.n() + 1 : static_cast<std::size_t>(weights[i])];
      run.ops += run.per_function_ops[i];
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

bool histograms_agree(const BenchReport& report) {
  for (const auto& run : report.runs) {
    if (run.histogram != report.runs.front().histogram) return false;
  }
  return true;
}

double median_ops(const AlgorithmRun& run) {
  if (run.per_function_ops.empty()) return 0;
  std::vector<std::uint32_t> v = run.per_function_ops;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  if (v.size() % 2) return v[mid];
  const auto upper = v[mid];
  const auto lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return (static_cast<double>(lower) + upper) / 2;
}

std::string format_report_csv(const BenchReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  char buf[64];
  for (const auto& run : report.runs) {
    const auto res = std::to_chars(buf, buf + sizeof buf, run.seconds, std::chars_format::fixed, 9);
    out += std::to_string(report.n) + ',' + std::to_string(report.function_count) + ',' +
           std::string(algorithm_name(run.algorithm)) + ',' + std::string(buf, res.ptr) + ',' +
           std::to_string(run.ops) + '\n';
  }
  return out;
}

BenchReport parse_report_csv(std::string_view csv) {
  std::vector<std::string_view> lines = split(csv, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw std::invalid_argument("missing CSV header");
  BenchReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != 5) throw std::invalid_argument("CSV row " + std::to_string(i) + " needs 5 fields");
    const auto algo = parse_algorithm(fields[2]);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + std::string(fields[2]) + "'");
    report.n = static_cast<unsigned>(parse_u64(fields[0], "n"));
    report.function_count = parse_u64(fields[1], "functions");
    AlgorithmRun run{*algo, 0, parse_u64(fields[4], "ops"), {}, {}};
    const auto [ptr, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(),
                                           run.seconds, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != fields[3].data() + fields[3].size()) {
      throw std::invalid_argument("malformed seconds '" + std::string(fields[3]) + "'");
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

void write_report(const BenchReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report file " + path.string());
  out << format_report_csv(report);
  if (!out) throw std::runtime_error("failed writing report " + path.string());
}

}  // namespace boolcube
