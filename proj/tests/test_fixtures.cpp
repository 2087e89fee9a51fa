#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolcube/fixtures.hpp"

using namespace boolcube;
namespace fs = std::filesystem;

TEST_SUITE("fixtures") {

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment\n\n3 10\n4  20\r\n5 123456789012345678901234567890\n");
  const BFile f = parse_bfile(in);
  CHECK(f.offset == 3);
  REQUIRE(f.values.size() == 3);
  CHECK(f.values[2] == BigCount("123456789012345678901234567890"));

  std::istringstream gap("0 1\n2 1\n");
  CHECK_THROWS_AS(parse_bfile(gap), std::invalid_argument);
  std::istringstream junk("0 x\n");
  CHECK_THROWS_AS(parse_bfile(junk), std::invalid_argument);
  std::istringstream lone("7\n");
  CHECK_THROWS_AS(parse_bfile(lone), std::invalid_argument);
}

TEST_CASE("committed fixtures pass") {
  for (const auto& r : check_fixture_dir(BOOLCUBE_FIXTURE_DIR)) {
    CHECK_MESSAGE(r.ok, r.sequence << " " << r.error);
    CHECK(r.terms > 0);
  }
}

TEST_CASE("a single corrupted value is located") {
  const fs::path src = fs::path(BOOLCUBE_FIXTURE_DIR) / "b294648.txt";
  BFile f = read_bfile(src);
  f.values[100] += 1;
  const FixtureCheck r = check_fixture("A294648", f);
  CHECK_FALSE(r.ok);
  REQUIRE(r.bad_index);
  CHECK(*r.bad_index == f.offset + 100);

  BFile masks = read_bfile(fs::path(BOOLCUBE_FIXTURE_DIR) / "b305860.txt");
  masks.values.back() -= 1;
  const FixtureCheck rm = check_fixture("A305860", masks);
  CHECK_FALSE(rm.ok);
  CHECK(*rm.bad_index == masks.offset + static_cast<std::int64_t>(masks.values.size()) - 1);
}

TEST_CASE("unknown sequence") {
  CHECK_THROWS_AS(check_fixture("A999999", BFile{0, {1}}), std::invalid_argument);
}

TEST_CASE("missing file is reported, not thrown") {
  const fs::path empty = fs::temp_directory_path() / "boolcube_empty_fixtures";
  fs::create_directories(empty);
  for (const auto& r : check_fixture_dir(empty)) {
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.error.empty());
  }
}

}  // TEST_SUITE
