#include <gf2/cubic.hpp>

#include <algorithm>
#include <bit>

namespace gf2 {

namespace {

// Folds x and y so that the low half of each 2s-bit lane carries x's partial
// parity and the high half carries y's.
inline word merge(word x, word y, unsigned s, word lo_mask) noexcept {
  return ((x ^ (x >> s)) & lo_mask) | ((y ^ (y << s)) & ~lo_mask);
}

inline word dot(const word* a, const word* b, std::size_t w) noexcept {
  word acc = 0;
  for (std::size_t i = 0; i < w; ++i) acc ^= a[i] & b[i];
  return acc;
}

}  // namespace

bool parity_accumulate(std::span<const word> words) noexcept {
  word acc = 0;
  for (word w : words) acc ^= w;
  return (std::popcount(acc) & 1) != 0;
}

word parity64(const std::array<word, 64>& words) noexcept {
  std::array<word, 32> buf{};
  for (unsigned i = 0; i < 32; ++i) buf[i] = merge(words[i], words[i + 32], 32, 0x00000000FFFFFFFFull);
  for (unsigned i = 0; i < 16; ++i) buf[i] = merge(buf[i], buf[i + 16], 16, 0x0000FFFF0000FFFFull);
  for (unsigned i = 0; i < 8; ++i) buf[i] = merge(buf[i], buf[i + 8], 8, 0x00FF00FF00FF00FFull);
  for (unsigned i = 0; i < 4; ++i) buf[i] = merge(buf[i], buf[i + 4], 4, 0x0F0F0F0F0F0F0F0Full);
  for (unsigned i = 0; i < 2; ++i) buf[i] = merge(buf[i], buf[i + 2], 2, 0x3333333333333333ull);
  return merge(buf[0], buf[1], 1, 0x5555555555555555ull);
}

BitMatrix mul_cubic(ConstWindow a, ConstWindow b) {
  if (a.ncols() != b.nrows()) throw dimension_error("mul_cubic: inner dimensions differ");
  const std::size_t m = a.nrows();
  const std::size_t n = b.ncols();
  BitMatrix c(m, n);
  if (m == 0 || n == 0 || a.ncols() == 0) return c;

  // Row j of bt is column j of b, so every entry of c is a row-by-row dot product.
  const BitMatrix bt = transpose(b);
  const std::size_t w = bt.width();
  const word amask = a.last_mask();
  std::vector<word> arow(w);
  std::array<word, 64> acc{};

  const std::size_t full_blocks = n >= word_bits ? n / word_bits : 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(a.row(i), a.row(i) + w, arow.begin());
    arow[w - 1] &= amask;
    word* crow = c.row(i);
    for (std::size_t blk = 0; blk < full_blocks; ++blk) {
      // Column q of the block maps to bit 63 - q of the output word.
      for (std::size_t q = 0; q < word_bits; ++q) acc[63 - q] = dot(arow.data(), bt.row(blk * word_bits + q), w);
      crow[blk] = parity64(acc);
    }
    for (std::size_t j = full_blocks * word_bits; j < n; ++j) {
      if (std::popcount(dot(arow.data(), bt.row(j), w)) & 1) crow[j / word_bits] |= column_bit(j);
    }
  }
  return c;
}

}  // namespace gf2
