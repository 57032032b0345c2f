#include <gf2/graycode.hpp>
#include <gf2/rowops.hpp>

#include <array>
#include <bit>
#include <string>

namespace gf2 {

GrayCode build_gray(unsigned k) {
  if (k < 1 || k > max_gray_bits) throw parameter_error("gray code width must be in 1..16, got " + std::to_string(k));
  GrayCode g;
  g.k = k;
  g.code = {0, 1};
  for (unsigned bits = 2; bits <= k; ++bits) {
    const std::size_t half = g.code.size();
    g.code.reserve(2 * half);
    for (std::size_t i = half; i-- > 0;) g.code.push_back(g.code[i] | (std::uint32_t{1} << (bits - 1)));
  }
  g.changed_bit.assign(g.code.size(), 0);
  for (std::size_t j = 1; j < g.code.size(); ++j)
    g.changed_bit[j] = static_cast<std::uint8_t>(std::countr_zero(g.code[j] ^ g.code[j - 1]));
  return g;
}

const GrayCode& gray_code(unsigned k) {
  static const std::array<GrayCode, max_gray_bits + 1> cache = [] {
    std::array<GrayCode, max_gray_bits + 1> c;
    for (unsigned i = 1; i <= max_gray_bits; ++i) c[i] = build_gray(i);
    return c;
  }();
  if (k < 1 || k > max_gray_bits) throw parameter_error("gray code width must be in 1..16, got " + std::to_string(k));
  return cache[k];
}

CombinationTable::CombinationTable(unsigned max_k, std::size_t ncols) : max_k_(max_k) {
  if (max_k < 1 || max_k > max_gray_bits) throw parameter_error("table width must be in 1..16");
  rows_ = BitMatrix(std::size_t{1} << max_k, ncols);
}

void make_table(ConstWindow b, std::size_t start_row, unsigned k, CombinationTable& table) {
  if (k < 1 || k > table.max_k_) throw parameter_error("table width exceeds table capacity");
  if (start_row + k > b.nrows()) throw dimension_error("make_table: row range exceeds source");
  if (b.ncols() != table.rows_.ncols()) throw dimension_error("make_table: column count mismatch");

  table.k_ = k;
  const std::size_t w = b.width();
  if (w == 0) return;
  const word mask = b.last_mask();
  const GrayCode& g = gray_code(k);
  BitMatrix& t = table.rows_;

  std::fill(t.row(0), t.row(0) + w, word{0});
  auto& ops = counters();
  ++ops.table_builds;
  const std::size_t n = std::size_t{1} << k;
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t src_row = start_row + (k - 1 - g.changed_bit[j]);
    const word* src = b.row(src_row);
    const word* prev = t.row(g.code[j - 1]);
    word* dst = t.row(g.code[j]);
    xor_words3(dst, prev, src, w - 1);
    dst[w - 1] = prev[w - 1] ^ (src[w - 1] & mask);
    ++ops.table_row_additions;
  }
}

}  // namespace gf2
