#include <gf2/io.hpp>

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace gf2 {

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (unsigned i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in, std::size_t& offset, const char* what) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  if (in.gcount() != 8) throw format_error(std::string("truncated ") + what, offset + static_cast<std::size_t>(in.gcount()));
  std::uint64_t v = 0;
  for (unsigned i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
  offset += 8;
  return v;
}

}  // namespace

void write_matrix(std::ostream& out, const BitMatrix& a) {
  out.write(file_magic, sizeof(file_magic));
  out.put(static_cast<char>(file_version));
  put_u64(out, a.nrows());
  put_u64(out, a.ncols());
  const std::size_t w = a.width();
  const word mask = a.last_mask();
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const word* row = a.row(r);
    for (std::size_t i = 0; i < w; ++i) put_u64(out, i + 1 == w ? row[i] & mask : row[i]);
  }
}

BitMatrix read_matrix(std::istream& in) {
  std::size_t offset = 0;
  std::array<char, 5> head{};
  in.read(head.data(), head.size());
  if (in.gcount() < 4 || !std::equal(head.begin(), head.begin() + 4, file_magic))
    throw format_error("bad magic, expected GF2M", 0);
  if (in.gcount() < 5) throw format_error("truncated header", 4);
  if (static_cast<unsigned char>(head[4]) != file_version)
    throw format_error("unsupported version " + std::to_string(static_cast<unsigned char>(head[4])), 4);
  offset = 5;
  const std::uint64_t nrows = get_u64(in, offset, "row count");
  const std::uint64_t ncols = get_u64(in, offset, "column count");
  // Refuse headers whose payload cannot exist before allocating.
  if (nrows > (std::uint64_t{1} << 40) || ncols > (std::uint64_t{1} << 40) ||
      (ncols > 0 && nrows > (std::uint64_t{1} << 40) / words_for(ncols)))
    throw format_error("implausible dimensions " + std::to_string(nrows) + "x" + std::to_string(ncols), 5);

  BitMatrix a(nrows, ncols);
  const std::size_t w = a.width();
  const word mask = a.last_mask();
  for (std::size_t r = 0; r < nrows; ++r) {
    word* row = a.row(r);
    for (std::size_t i = 0; i < w; ++i) {
      const std::size_t at = offset;
      row[i] = get_u64(in, offset, "matrix data");
      if (i + 1 == w && (row[i] & ~mask) != 0)
        throw format_error("dirty trailing bits in row " + std::to_string(r), at);
    }
  }
  return a;
}

void save_matrix(const std::filesystem::path& path, const BitMatrix& a) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw error("cannot open " + path.string() + " for writing");
  write_matrix(out, a);
  out.flush();
  if (!out) throw error("write failed: " + path.string());
}

BitMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path.string());
  try {
    return read_matrix(in);
  } catch (const format_error& e) {
    throw format_error(path.string() + ": " + e.what(), e.offset);
  }
}

}  // namespace gf2
