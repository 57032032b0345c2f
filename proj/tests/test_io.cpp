#include <doctest.h>

#include <gf2/io.hpp>

#include <sstream>

using namespace gf2;

namespace {

std::string serialize(const BitMatrix& a) {
  std::ostringstream out(std::ios::binary);
  write_matrix(out, a);
  return out.str();
}

BitMatrix parse(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_matrix(in);
}

}  // namespace

TEST_CASE("file layout is bit-exact") {
  BitMatrix a(2, 70);
  a.set(0, 0, true);   // MSB of word 0
  a.set(1, 69, true);  // bit 58 of word 1
  const std::string bytes = serialize(a);
  REQUIRE(bytes.size() == 4 + 1 + 8 + 8 + 2 * 2 * 8);
  CHECK(bytes.substr(0, 4) == "GF2M");
  CHECK(static_cast<unsigned char>(bytes[4]) == 0x01);
  CHECK(static_cast<unsigned char>(bytes[5]) == 2);
  CHECK(static_cast<unsigned char>(bytes[13]) == 70);
  // Row 0, word 0 = 0x8000000000000000 little-endian: last byte is 0x80.
  CHECK(static_cast<unsigned char>(bytes[21 + 7]) == 0x80);
  // Row 1, word 1 = 1 << 58 -> byte 7 holds 0x04.
  CHECK(static_cast<unsigned char>(bytes[21 + 24 + 7]) == 0x04);
  CHECK(parse(bytes) == a);
}

TEST_CASE("write/read round-trip on random shapes") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const BitMatrix a = random_matrix(s * 7 % 50, s * 37 % 300, s);
    CHECK(parse(serialize(a)) == a);
  }
}

TEST_CASE("reader rejects malformed files with an offset") {
  const std::string good = serialize(random_matrix(3, 10, 1));

  std::string bad_magic = good;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(parse(bad_magic), format_error);

  std::string bad_version = good;
  bad_version[4] = 2;
  try {
    parse(bad_version);
    FAIL("expected format_error");
  } catch (const format_error& e) {
    CHECK(e.offset == 4);
  }

  try {
    parse(good.substr(0, good.size() - 3));
    FAIL("expected format_error");
  } catch (const format_error& e) {
    CHECK(e.offset > 21);
  }

  // Column 10 of row 1 lies past ncols: set bit 53 of row 1's only word.
  std::string dirty = good;
  dirty[21 + 8 + 6] = static_cast<char>(static_cast<unsigned char>(dirty[21 + 8 + 6]) | 0x20);
  try {
    parse(dirty);
    FAIL("expected format_error");
  } catch (const format_error& e) {
    CHECK(e.offset == 29);
    CHECK(std::string(e.what()).find("dirty trailing bits") != std::string::npos);
  }

  CHECK_THROWS_AS(parse("GF2"), format_error);
  CHECK_THROWS_AS(parse(""), format_error);
}

TEST_CASE("save and load") {
  const auto path = std::filesystem::temp_directory_path() / "gf2_io_test.gf2m";
  const BitMatrix a = random_matrix(33, 129, 5);
  save_matrix(path, a);
  CHECK(load_matrix(path) == a);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_matrix(path), gf2::error);
}
