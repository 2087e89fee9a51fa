#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "boolcube/bench.hpp"

using namespace boolcube;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "boolcube_test_bench";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::vector<Algorithm> kAll = {Algorithm::exhaustive, Algorithm::wlo, Algorithm::bitwise};

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("corpus generation is sized and deterministic") {
  const fs::path dir = scratch_dir();
  const Corpus c = gen_corpus(100, 1, 42, dir / "a.bin");
  CHECK(fs::file_size(c.path) == 800);
  CHECK(c.word_count == 100);
  gen_corpus(100, 1, 42, dir / "b.bin");
  CHECK(slurp(dir / "a.bin") == slurp(dir / "b.bin"));
  gen_corpus(100, 1, 43, dir / "c.bin");
  CHECK(slurp(dir / "a.bin") != slurp(dir / "c.bin"));

  const Corpus c8 = gen_corpus(10000, 4, 7, dir / "n8.bin");
  CHECK(c8.function_count() == 10000);
  const Corpus reopened = open_corpus(dir / "n8.bin");
  CHECK(reopened.word_count == 40000);
  CHECK(reopened.words_per_function == 4);
  CHECK(reopened.seed == 7);
}

TEST_CASE("open_corpus detects truncation") {
  const fs::path dir = scratch_dir();
  gen_corpus(10, 2, 1, dir / "t.bin");
  fs::resize_file(dir / "t.bin", 120);
  CHECK_THROWS_AS(open_corpus(dir / "t.bin"), std::runtime_error);
  CHECK_THROWS_AS(open_corpus(dir / "missing.bin"), std::runtime_error);
}

TEST_CASE("run_bench: histograms agree, deterministic tallies") {
  const fs::path dir = scratch_dir();
  for (unsigned n : {4u, 6u, 8u}) {
    const CubeDim dim(n);
    const Corpus c = gen_corpus(3000, dim.word_count(), 100 + n, dir / ("r" + std::to_string(n) + ".bin"));
    const BenchReport r1 = run_bench(c, dim, kAll);
    const BenchReport r2 = run_bench(c, dim, kAll);
    REQUIRE(r1.runs.size() == 3);
    CHECK(r1.function_count == 3000);
    CHECK(histograms_agree(r1));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(r1.runs[i].histogram == r2.runs[i].histogram);
      CHECK(r1.runs[i].ops == r2.runs[i].ops);
    }
    CHECK(r1.runs[0].ops == 3000 * dim.size());
  }
}

TEST_CASE("run_bench edge cases") {
  const fs::path dir = scratch_dir();
  const Corpus c = gen_corpus(10, 4, 1, dir / "e.bin");
  const BenchReport empty = run_bench(c, CubeDim(8), {});
  CHECK(empty.runs.empty());
  CHECK_THROWS_AS(run_bench(c, CubeDim(10), kAll), std::invalid_argument);
}

TEST_CASE("median wlo probes stay small on random functions") {
  const fs::path dir = scratch_dir();
  const CubeDim dim(8);
  const Corpus c = gen_corpus(10000, dim.word_count(), 2024, dir / "m.bin");
  const std::vector<Algorithm> wlo_only = {Algorithm::wlo};
  const BenchReport r = run_bench(c, dim, wlo_only);
  CHECK(median_ops(r.runs[0]) <= dim.n() + 2);
}

TEST_CASE("report CSV") {
  BenchReport report;
  report.n = 10;
  report.function_count = 1000;
  report.runs.push_back({Algorithm::exhaustive, 1.25, 1024000, {}, {}});
  report.runs.push_back({Algorithm::wlo, 0.000125, 2000, {}, {}});
  report.runs.push_back({Algorithm::bitwise, 0.5, 17000, {}, {}});
  const std::string csv = format_report_csv(report);
  CHECK(csv ==
        "n,functions,algorithm,seconds,ops\n"
        "10,1000,exhaustive,1.250000000,1024000\n"
        "10,1000,wlo,0.000125000,2000\n"
        "10,1000,bitwise,0.500000000,17000\n");

  const BenchReport parsed = parse_report_csv(csv);
  CHECK(parsed.runs.size() == 3);
  CHECK(parsed.runs[1].seconds == doctest::Approx(0.000125));
  CHECK(format_report_csv(parsed) == csv);

  const fs::path out = scratch_dir() / "report.csv";
  write_report(report, out);
  CHECK(slurp(out) == csv);
  CHECK_THROWS_AS(parse_report_csv("bogus\n"), std::invalid_argument);
}

TEST_CASE("real report round-trips byte for byte") {
  const fs::path dir = scratch_dir();
  const Corpus c = gen_corpus(500, 1, 9, dir / "rt.bin");
  const BenchReport r = run_bench(c, CubeDim(6), kAll);
  write_report(r, dir / "rt.csv");
  const std::string first = slurp(dir / "rt.csv");
  CHECK(format_report_csv(parse_report_csv(first)) == first);
}

}  // TEST_SUITE
