#pragma once

#include <gf2/bitmatrix.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gf2 {

inline constexpr unsigned max_gray_bits = 16;

// k-bit reflected binary code. code[0] == 0 and consecutive entries differ in
// exactly the bit changed_bit[j] (bit 0 = least significant).
struct GrayCode {
  unsigned k = 0;
  std::vector<std::uint32_t> code;
  std::vector<std::uint8_t> changed_bit;
};

// Builds the k-bit code by reflect-and-prefix from the (k-1)-bit code.
// Throws parameter_error unless 1 <= k <= 16.
GrayCode build_gray(unsigned k);

// Process-wide cache of build_gray(1..16), built on first use.
const GrayCode& gray_code(unsigned k);

// All 2^k linear combinations of k consecutive rows of a source matrix.
// rows(x) is the XOR of the source rows selected by x, where bit k-1 of x
// picks the first row; this matches the order of read_bits so an index read
// from A addresses the table directly.
class CombinationTable {
 public:
  CombinationTable() = default;
  // Storage for tables of up to 2^max_k rows of ncols columns.
  CombinationTable(unsigned max_k, std::size_t ncols);

  unsigned k() const noexcept { return k_; }
  unsigned max_k() const noexcept { return max_k_; }
  std::size_t ncols() const noexcept { return rows_.ncols(); }
  std::size_t size() const noexcept { return std::size_t{1} << k_; }

  const word* row(std::size_t x) const noexcept { return rows_.row(x); }
  ConstWindow rows() const { return rows_.window(0, 0, size(), rows_.ncols()); }

 private:
  friend void make_table(ConstWindow b, std::size_t start_row, unsigned k, CombinationTable& table);

  unsigned k_ = 0;
  unsigned max_k_ = 0;
  BitMatrix rows_;
};

// Fills table with the combinations of rows [start_row, start_row + k) of b,
// walking the Gray sequence so that every entry past the zero row costs one
// row addition (2^k - 1 in total).
void make_table(ConstWindow b, std::size_t start_row, unsigned k, CombinationTable& table);

}  // namespace gf2
