#include "boolcube/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "boolcube/cube.hpp"
#include "boolcube/enumerate.hpp"
#include "boolcube/masks.hpp"
#include "boolcube/wlo.hpp"

namespace boolcube {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Library values for `count` terms starting at b-file index `offset`.
std::vector<BigCount> expected_terms(std::string_view seq, std::int64_t offset, std::size_t count) {
  std::vector<BigCount> out;
  out.reserve(count);
  if (count == 0) return out;

  if (seq == "A000120") {
    if (offset < 0) throw std::invalid_argument("A000120 offset must be nonnegative");
    const std::uint64_t last = static_cast<std::uint64_t>(offset) + count - 1;
    const unsigned n = std::max(1u, static_cast<unsigned>(std::bit_width(last)));
    if (n > CubeDim::kMax) throw std::invalid_argument("A000120 fixture too long");
    const WeightTable wt = build_weight_table(CubeDim(n));
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(static_cast<unsigned long>(wt[offset + i]));
  } else if (seq == "A294648") {
    for (unsigned n = 1; out.size() < count; ++n) {
      const WloSequence l = wlo_bucket(CubeDim(n));
      for (auto s : l.order()) {
        if (out.size() == count) break;
        out.emplace_back(static_cast<unsigned long>(s));
      }
    }
  } else if (seq == "A305860") {
    for (unsigned n = 1; out.size() < count; ++n) {
      const MaskSet ms = masks_recursive(CubeDim(n));
      for (unsigned k = 0; k <= n && out.size() < count; ++k) out.push_back(mask_paper_serial(ms[k]));
    }
  } else if (seq == "A051459" || seq == "A001142" || seq == "A000142") {
    if (offset < 0) throw std::invalid_argument(std::string(seq) + " offset must be nonnegative");
    for (std::size_t i = 0; i < count; ++i) {
      const auto n = static_cast<unsigned>(offset + static_cast<std::int64_t>(i));
      if (seq == "A051459") out.push_back(count_weight_orders(n));
      else if (seq == "A001142") out.push_back(count_max_chains_wo(n));
      else out.push_back(count_max_chains_precedes(n));
    }
  } else {
    throw std::invalid_argument("unknown sequence " + std::string(seq));
  }
  return out;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile file;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": expected 'index value'");
    }
    const std::string_view idx_text = body.substr(0, space);
    const std::string_view val_text = trim(body.substr(space));
    std::int64_t index = 0;
    const auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
    if (ec != std::errc{} || ptr != idx_text.data() + idx_text.size()) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": bad index");
    }
    if (first) {
      file.offset = index;
      first = false;
    } else if (index != file.offset + static_cast<std::int64_t>(file.values.size())) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": index " +
                                  std::to_string(index) + " is not consecutive");
    }
    BigCount value;
    if (val_text.empty() || value.set_str(std::string(val_text), 10) != 0) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": bad value");
    }
    file.values.push_back(std::move(value));
  }
  return file;
}

BFile read_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_bfile(in);
}

const std::vector<std::string>& known_sequences() {
  static const std::vector<std::string> ids = {"A294648", "A305860", "A051459",
                                               "A001142", "A000142", "A000120"};
  return ids;
}

FixtureCheck check_fixture(std::string_view sequence, const BFile& file) {
  FixtureCheck check;
  check.sequence = std::string(sequence);
  check.terms = file.values.size();
  const std::vector<BigCount> expected = expected_terms(sequence, file.offset, file.values.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != file.values[i]) {
      check.bad_index = file.offset + static_cast<std::int64_t>(i);
      check.expected = expected[i].get_str();
      check.found = file.values[i].get_str();
      return check;
    }
  }
  check.ok = check.terms > 0;
  if (!check.ok) check.error = "fixture has no terms";
  return check;
}

std::vector<FixtureCheck> check_fixture_dir(const std::filesystem::path& dir) {
  std::vector<FixtureCheck> results;
  for (const auto& id : known_sequences()) {
    const auto path = dir / ("b" + id.substr(1) + ".txt");
    try {
      results.push_back(check_fixture(id, read_bfile(path)));
    } catch (const std::exception& e) {
      FixtureCheck failed;
      failed.sequence = id;
      failed.error = e.what();
      results.push_back(std::move(failed));
    }
  }
  return results;
}

}  // namespace boolcube
