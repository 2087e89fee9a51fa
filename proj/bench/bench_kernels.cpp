// Serial reference against OpenMP kernels, and the three searches against
// each other, on a seeded in-memory corpus.
//
//   bench_kernels [n=10] [functions=100000] [seed=1]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "boolcube/batch.hpp"
#include "boolcube/random.hpp"

using namespace boolcube;

namespace {

double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 10;
  const std::size_t count = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 100000;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

  const CubeDim dim(n);
  const SearchContext ctx = SearchContext::build(dim);
  const std::size_t words = count * dim.word_count();
  std::vector<std::uint64_t> corpus(words);

  std::printf("n=%u functions=%zu threads=%d\n", n, count, omp_get_max_threads());

  std::vector<std::uint64_t> check(words);
  const double fill_s = best_of(3, [&] { fill_random_words_serial(seed, 0, check); });
  const double fill_p = best_of(3, [&] { fill_random_words_parallel(seed, 0, corpus); });
  std::printf("%-22s serial %.6f  parallel %.6f  same=%s\n", "fill", fill_s, fill_p,
              check == corpus ? "yes" : "NO");
  if (n < 6) {
    for (auto& w : corpus) w &= low_word_mask(dim);
  }

  std::vector<std::int8_t> ws(count), wp(count);
  std::vector<std::uint32_t> os(count), op(count);
  bool all_same = check == corpus || n < 6;
  for (Algorithm algo : {Algorithm::exhaustive, Algorithm::wlo, Algorithm::bitwise}) {
    const int reps = algo == Algorithm::exhaustive ? 1 : 3;
    const double ts = best_of(reps, [&] { batch_max_weight_serial(ctx, algo, corpus, ws, os); });
    const double tp = best_of(reps, [&] { batch_max_weight_parallel(ctx, algo, corpus, wp, op); });
    const bool same = ws == wp && os == op;
    all_same &= same;
    std::uint64_t ops = 0;
    for (auto o : os) ops += o;
    const std::string label = "max weight/" + std::string(algorithm_name(algo));
    std::printf("%-22s serial %.6f  parallel %.6f  same=%s  ops=%llu\n", label.c_str(), ts, tp,
                same ? "yes" : "NO", static_cast<unsigned long long>(ops));
  }

  std::vector<std::int8_t> ds(count), dp(count);
  const double ds_t = best_of(3, [&] { batch_degree_serial(ctx, corpus, ds); });
  const double dp_t = best_of(3, [&] { batch_degree_parallel(ctx, corpus, dp); });
  all_same &= ds == dp;
  std::printf("%-22s serial %.6f  parallel %.6f  same=%s\n", "degree", ds_t, dp_t,
              ds == dp ? "yes" : "NO");
  return all_same ? 0 : 1;
}
