#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolcube/bench.hpp"
#include "boolcube/enumerate.hpp"
#include "boolcube/fixtures.hpp"
#include "boolcube/masks.hpp"
#include "boolcube/search.hpp"
#include "boolcube/subsets.hpp"
#include "boolcube/wlo.hpp"

using namespace boolcube;
namespace fs = std::filesystem;

namespace {

// Bad input that is well-formed on the command line: exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (s.back() == ',') out.emplace_back();
  return out;
}

// A truth table argument is either 2^n '0'/'1' characters, coordinate 0
// first, or the path of a raw little-endian word file; `index` selects a
// function inside a multi-function file.
TruthTable load_table(CubeDim dim, const std::string& arg, std::uint64_t index) {
  const bool bits = !arg.empty() && arg.find_first_not_of("01") == std::string::npos;
  if (bits && !fs::exists(arg)) {
    if (arg.size() != dim.size()) {
      throw DomainError("bitstring has " + std::to_string(arg.size()) + " characters, expected " +
                        std::to_string(dim.size()));
    }
    return TruthTable::from_bitstring(dim, arg);
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw DomainError("cannot read truth table file " + arg);
  const std::uint64_t bytes = fs::file_size(arg);
  const std::uint64_t per_function = dim.word_count() * 8;
  if (bytes % per_function != 0) {
    throw DomainError(arg + " is " + std::to_string(bytes) + " bytes, not a multiple of " +
                      std::to_string(per_function));
  }
  if (index >= bytes / per_function) {
    throw DomainError("function index " + std::to_string(index) + " out of range for " + arg);
  }
  in.seekg(static_cast<std::streamoff>(index * per_function));
  std::vector<unsigned char> raw(per_function);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  std::vector<std::uint64_t> words(dim.word_count(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) words[i / 8] |= std::uint64_t{raw[i]} << (8 * (i % 8));
  words.back() &= low_word_mask(dim);
  return TruthTable::from_words(dim, words);
}

std::string mask_row(const LayerMask& m) {
  std::string row;
  for (std::uint64_t i = 0; i < m.dim.size(); ++i) {
    if (i && i % 8 == 0) row += ' ';
    row += test_bit(m.words, i) ? '1' : '0';
  }
  return row;
}

std::vector<Algorithm> parse_algorithms(const std::string& list) {
  std::vector<Algorithm> out;
  for (const auto& name : split_commas(list)) {
    const auto a = parse_algorithm(name);
    if (!a) throw CLI::ValidationError("--algos", "unknown algorithm '" + name + "'");
    if (std::find(out.begin(), out.end(), *a) == out.end()) out.push_back(*a);
  }
  return out;
}

// Largest --upto per sequence; terms grow to millions of digits past these.
constexpr unsigned kWeightOrdersMax = 16;
constexpr unsigned kChainsWoMax = 500;
constexpr unsigned kFactorialMax = 10000;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-order tools for the Boolean cube"};
  app.require_subcommand(1, 1);

  unsigned n = 0;

  auto* wlo = app.add_subcommand("wlo", "print the weight-lexicographic order");
  std::optional<unsigned> wlo_layer;
  std::string wlo_out;
  wlo->add_option("--n", n, "dimension")->required();
  wlo->add_option("--layer", wlo_layer, "only layer K");
  wlo->add_option("--out", wlo_out, "write one serial per line to FILE");

  auto* masks = app.add_subcommand("masks", "print layer masks");
  bool paper_serials = false;
  masks->add_option("--n", n, "dimension")->required();
  masks->add_flag("--paper-serials", paper_serials, "print masks as decimal integers");

  auto* search = app.add_subcommand("search", "largest-weight vector in a support");
  std::string search_tt;
  bool search_min = false;
  std::uint64_t search_index = 0;
  search->add_option("--n", n, "dimension")->required();
  search->add_option("--tt", search_tt, "truth table: bitstring or word file")->required();
  search->add_option("--index", search_index, "function index inside a word file");
  search->add_flag("--min", search_min, "smallest weight instead");

  auto* degree = app.add_subcommand("degree", "algebraic degree");
  std::string degree_anf, degree_tt;
  std::uint64_t degree_index = 0;
  degree->add_option("--n", n, "dimension")->required();
  auto* anf_opt = degree->add_option("--anf", degree_anf, "ANF vector: bitstring or word file");
  auto* tt_opt = degree->add_option("--tt", degree_tt, "truth table, transformed first");
  degree->add_option("--index", degree_index, "function index inside a word file");
  anf_opt->excludes(tt_opt);

  auto* enumerate = app.add_subcommand("enumerate", "counting sequences");
  std::string seq;
  unsigned upto = 0;
  bool use_oracle = false;
  enumerate->add_option("--seq", seq, "sequence id")
      ->required()
      ->check(CLI::IsMember({"A051459", "A001142", "A000142"}));
  enumerate->add_option("--upto", upto, "last index")->required();
  enumerate->add_flag("--oracle", use_oracle, "cross-check against brute force where feasible");

  auto* subsets = app.add_subcommand("subsets", "subsets of a labelled universe");
  std::string universe_arg, rank_arg;
  bool all = false;
  std::optional<unsigned> k;
  std::optional<std::uint64_t> unrank_arg;
  subsets->add_option("--universe", universe_arg, "comma separated labels")->required();
  auto* all_opt = subsets->add_flag("--all", all, "every subset by cardinality");
  auto* k_opt = subsets->add_option("--k", k, "subsets of size K");
  auto* rank_opt = subsets->add_option("--rank", rank_arg, "serial of a comma separated subset");
  auto* unrank_opt = subsets->add_option("--unrank", unrank_arg, "subset with serial S");
  for (auto* a : {all_opt, k_opt, rank_opt, unrank_opt}) {
    for (auto* b : {all_opt, k_opt, rank_opt, unrank_opt}) {
      if (a != b) a->excludes(b);
    }
  }

  auto* bench = app.add_subcommand("bench", "corpus generation and timing");
  bool gen = false, run = false;
  std::uint64_t count = 0, wpf = 0, seed = 0;
  std::string out_path, corpus_path, algos = "exhaustive,wlo,bitwise", report_path;
  auto* gen_opt = bench->add_flag("--gen", gen, "write a random corpus");
  auto* run_opt = bench->add_flag("--run", run, "time the search algorithms");
  gen_opt->excludes(run_opt);
  bench->add_option("--count", count, "functions to generate");
  bench->add_option("--wpf", wpf, "words per function (default from --n)");
  bench->add_option("--seed", seed, "generator seed");
  bench->add_option("--out", out_path, "corpus file to write");
  bench->add_option("--corpus", corpus_path, "corpus file to read");
  bench->add_option("--n", n, "dimension");
  bench->add_option("--algos", algos, "comma separated subset of exhaustive,wlo,bitwise");
  bench->add_option("--report", report_path, "CSV destination (default stdout)");

  auto* fixtures = app.add_subcommand("fixtures", "validate b-files against the generators");
  std::string fixture_dir;
  fixtures->add_option("--dir", fixture_dir, "directory of b<digits>.txt files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*wlo) {
      const CubeDim dim(n);
      const WloSequence s = wlo_bucket(dim);
      const auto serials = wlo_layer ? s.layer(*wlo_layer) : s.order();
      if (!wlo_out.empty()) {
        std::ofstream f(wlo_out);
        if (!f) throw DomainError("cannot write " + wlo_out);
        write_wlo_text(f, serials);
        if (!f) throw DomainError("failed writing " + wlo_out);
      } else {
        std::string line;
        for (std::size_t i = 0; i < serials.size(); ++i) {
          if (i) line += ' ';
          line += std::to_string(serials[i]);
        }
        std::cout << line << '\n';
      }
    } else if (*masks) {
      const MaskSet m = masks_recursive(CubeDim(n));
      for (unsigned j = 0; j <= n; ++j) {
        if (paper_serials) std::cout << j << ' ' << mask_paper_serial(m[j]).get_str() << '\n';
        else std::cout << mask_row(m[j]) << '\n';
      }
    } else if (*search) {
      const CubeDim dim(n);
      const TruthTable tt = load_table(dim, search_tt, search_index);
      const WloSequence s = wlo_bucket(dim);
      const auto hit = search_min ? wlo_search_min(tt, s) : wlo_search_max(tt, s);
      if (hit) std::cout << hit->serial.value() << ' ' << hit->weight << '\n';
      else std::cout << "none\n";
    } else if (*degree) {
      if (degree_anf.empty() && degree_tt.empty()) throw CLI::RequiredError("--anf or --tt");
      const CubeDim dim(n);
      const TruthTable anf = degree_tt.empty() ? load_table(dim, degree_anf, degree_index)
                                               : mobius_transform(load_table(dim, degree_tt, degree_index));
      const auto d = algebraic_degree(anf, masks_recursive(dim));
      if (d) std::cout << *d << '\n';
      else std::cout << "none\n";
    } else if (*enumerate) {
      const unsigned cap = seq == "A051459"   ? kWeightOrdersMax
                          : seq == "A001142" ? kChainsWoMax
                                               : kFactorialMax;
      if (upto > cap) throw DomainError(seq + " is limited to --upto " + std::to_string(cap));
      for (unsigned i = 0; i <= upto; ++i) {
        BigCount v;
        std::optional<BigCount> check;
        if (seq == "A051459") {
          v = count_weight_orders(i);
          if (use_oracle && i >= 1 && i <= 3) check = oracle_count_linear_extensions(i);
        } else if (seq == "A001142") {
          v = count_max_chains_wo(i);
          if (use_oracle && i >= 1 && i <= 4) check = oracle_count_chains(i, ChainRelation::weight_order);
        } else {
          v = count_max_chains_precedes(i);
          if (use_oracle && i >= 1 && i <= 10) check = oracle_count_shortest_paths(i);
        }
        if (check && *check != v) {
          std::cerr << "oracle mismatch at n=" << i << ": closed form " << v.get_str() << ", oracle "
                    << check->get_str() << '\n';
          return 1;
        }
        std::cout << i << ' ' << v.get_str() << '\n';
      }
    } else if (*subsets) {
      if (!all && !k && !unrank_arg && rank_opt->count() == 0) {
        throw CLI::RequiredError("one of --all, --k, --rank, --unrank");
      }
      const SubsetUniverse u(split_commas(universe_arg));
      if (all || k) {
        const SubsetStream stream = all ? subsets_in_cardinality_order(u) : k_subsets(u, *k);
        for (const SubsetHandle& h : stream) std::cout << format_subset(unrank(h)) << '\n';
      } else if (unrank_arg) {
        std::cout << format_subset(unrank(u, *unrank_arg)) << '\n';
      } else {
        std::cout << rank(u, split_commas(rank_arg)).serial().value() << '\n';
      }
    } else if (*bench) {
      if (gen) {
        if (count == 0 || out_path.empty()) throw CLI::RequiredError("--gen needs --count and --out");
        if (wpf == 0) {
          if (n == 0) throw CLI::RequiredError("--gen needs --wpf or --n");
          wpf = CubeDim(n).word_count();
        }
        const Corpus c = gen_corpus(count, wpf, seed, out_path);
        std::cerr << "wrote " << c.function_count() << " functions to " << c.path.string() << '\n';
      } else if (run) {
        if (corpus_path.empty() || n == 0) throw CLI::RequiredError("--run needs --corpus and --n");
        const auto list = parse_algorithms(algos);
        const BenchReport r = run_bench(open_corpus(corpus_path), CubeDim(n), list);
        if (!histograms_agree(r)) {
          std::cerr << "algorithms disagree on the weight histogram\n";
          return 1;
        }
        if (report_path.empty()) std::cout << format_report_csv(r);
        else write_report(r, report_path);
      } else {
        throw CLI::RequiredError("bench needs --gen or --run");
      }
    } else if (*fixtures) {
      if (!fs::is_directory(fixture_dir)) throw DomainError("not a directory: " + fixture_dir);
      bool ok = true;
      for (const FixtureCheck& r : check_fixture_dir(fixture_dir)) {
        ok &= r.ok;
        if (r.ok) {
          std::cout << r.sequence << " pass " << r.terms << " terms\n";
        } else if (r.bad_index) {
          std::cout << r.sequence << " FAIL index " << *r.bad_index << " expected " << r.expected
                    << " found " << r.found << '\n';
        } else {
          std::cout << r.sequence << " FAIL " << r.error << '\n';
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
