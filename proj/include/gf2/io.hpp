#pragma once

#include <gf2/bitmatrix.hpp>

#include <filesystem>
#include <iosfwd>

namespace gf2 {

// Binary matrix file: "GF2M", version byte 0x01, nrows and ncols as
// little-endian u64, then nrows * ceil(ncols/64) little-endian words, rows in
// order, bits past ncols zero.
inline constexpr char file_magic[4] = {'G', 'F', '2', 'M'};
inline constexpr unsigned char file_version = 0x01;

void write_matrix(std::ostream& out, const BitMatrix& a);
// Throws format_error (with the byte offset) on a bad header, truncated data
// or dirty trailing bits.
BitMatrix read_matrix(std::istream& in);

// File wrappers; I/O failures throw gf2::error naming the path.
void save_matrix(const std::filesystem::path& path, const BitMatrix& a);
BitMatrix load_matrix(const std::filesystem::path& path);

}  // namespace gf2
