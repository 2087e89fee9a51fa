#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolcube/bigcount.hpp"

namespace boolcube {

// An OEIS b-file: "index value" per line, '#' comments and blank lines
// ignored, indices consecutive from `offset`.
struct BFile {
  std::int64_t offset = 0;
  std::vector<BigCount> values;
};

// Throws std::invalid_argument on malformed or non-consecutive lines.
BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::filesystem::path& path);

struct FixtureCheck {
  std::string sequence;  // e.g. "A294648"
  bool ok = false;
  std::size_t terms = 0;
  std::optional<std::int64_t> bad_index;
  std::string expected;  // the library's value at bad_index
  std::string found;     // the fixture's value at bad_index
  std::string error;     // set when the file could not be read
};

// Sequences with a built-in generator:
//   A000120  weight table
//   A294648  l_1, l_2, ... concatenated, first term = l_1[0]
//   A305860  mask_paper_serial of m_{n,0..n} for n = 1, 2, ..., first term = #m_{1,0}
//   A051459, A001142, A000142  closed forms at index n
const std::vector<std::string>& known_sequences();

// Compares every term of `file` against the library. Throws
// std::invalid_argument for an unknown sequence id.
FixtureCheck check_fixture(std::string_view sequence, const BFile& file);

// Checks b<digits>.txt for every known sequence under `dir`.
std::vector<FixtureCheck> check_fixture_dir(const std::filesystem::path& dir);

}  // namespace boolcube
