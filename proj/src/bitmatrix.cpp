#include <gf2/bitmatrix.hpp>
#include <gf2/rowops.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

namespace gf2 {

namespace {

std::size_t storage_bytes(std::size_t nrows, std::size_t width) noexcept {
  return (nrows * width) * sizeof(word) + nrows * sizeof(std::size_t);
}

void require_same_shape(ConstWindow a, ConstWindow b, const char* op) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) throw dimension_error(std::string(op) + ": shape mismatch");
}

// In-place transpose of a 64x64 bit block: word i holds row i, column j at
// bit 63 - j.
void transpose64(std::array<word, 64>& a) noexcept {
  word m = 0x00000000FFFFFFFFull;
  for (unsigned j = 32; j != 0; j >>= 1, m ^= (m << j)) {
    for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const word t = (a[k] ^ (a[k | j] >> j)) & m;
      a[k] ^= t;
      a[k | j] ^= t << j;
    }
  }
}

// ORs ncols bits of src (starting at column 0) into dst starting at column
// dst_col. dst must be zero in the target range.
void or_bits_at(word* dst, std::size_t dst_col, const word* src, std::size_t ncols) noexcept {
  const std::size_t nw = words_for(ncols);
  const std::size_t base = dst_col / word_bits;
  const unsigned off = static_cast<unsigned>(dst_col % word_bits);
  const std::size_t last_dst = (dst_col + ncols - 1) / word_bits;
  for (std::size_t i = 0; i < nw; ++i) {
    word w = src[i];
    if (i + 1 == nw) w &= last_word_mask(ncols);
    dst[base + i] |= w >> off;
    if (off != 0 && base + i + 1 <= last_dst) dst[base + i + 1] |= w << (word_bits - off);
  }
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

BitMatrix::BitMatrix(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows), ncols_(ncols), width_(words_for(ncols)), row_index_(nrows), data_(nrows * width_, 0) {
  for (std::size_t r = 0; r < nrows_; ++r) row_index_[r] = r * width_;
  detail::note_alloc(storage_bytes(nrows_, width_));
}

BitMatrix::BitMatrix(const BitMatrix& other)
    : nrows_(other.nrows_), ncols_(other.ncols_), width_(other.width_), row_index_(other.row_index_),
      data_(other.data_) {
  detail::note_alloc(storage_bytes(nrows_, width_));
}

BitMatrix::BitMatrix(BitMatrix&& other) noexcept
    : nrows_(std::exchange(other.nrows_, 0)), ncols_(std::exchange(other.ncols_, 0)),
      width_(std::exchange(other.width_, 0)), row_index_(std::move(other.row_index_)),
      data_(std::move(other.data_)) {
  other.row_index_.clear();
  other.data_.clear();
}

BitMatrix& BitMatrix::operator=(const BitMatrix& other) {
  if (this != &other) {
    BitMatrix tmp(other);
    *this = std::move(tmp);
  }
  return *this;
}

BitMatrix& BitMatrix::operator=(BitMatrix&& other) noexcept {
  if (this != &other) {
    detail::note_free(storage_bytes(nrows_, width_));
    nrows_ = std::exchange(other.nrows_, 0);
    ncols_ = std::exchange(other.ncols_, 0);
    width_ = std::exchange(other.width_, 0);
    row_index_ = std::move(other.row_index_);
    data_ = std::move(other.data_);
    other.row_index_.clear();
    other.data_.clear();
  }
  return *this;
}

BitMatrix::~BitMatrix() { detail::note_free(storage_bytes(nrows_, width_)); }

void BitMatrix::clear() noexcept { std::fill(data_.begin(), data_.end(), word{0}); }

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  assert(a < nrows_ && b < nrows_);
  std::swap(row_index_[a], row_index_[b]);
}

bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept { return equal(a, b); }

void row_add(MatrixWindow c, std::size_t r1, ConstWindow s, std::size_t r2) {
  assert(c.ncols() == s.ncols());
  assert(r1 < c.nrows() && r2 < s.nrows());
  const std::size_t w = c.width();
  if (w == 0) return;
  word* dst = c.row(r1);
  const word* src = s.row(r2);
  xor_words(dst, src, w - 1);
  dst[w - 1] ^= src[w - 1] & c.last_mask();
}

BitMatrix add(ConstWindow a, ConstWindow b) {
  require_same_shape(a, b, "add");
  BitMatrix c(a.nrows(), a.ncols());
  add_into(c, a, b);
  return c;
}

void add_into(MatrixWindow dst, ConstWindow a, ConstWindow b) {
  require_same_shape(a, b, "add");
  require_same_shape(dst, a, "add");
  const std::size_t w = dst.width();
  if (w == 0) return;
  const word mask = dst.last_mask();
  for (std::size_t r = 0; r < dst.nrows(); ++r) {
    word* d = dst.row(r);
    const word* x = a.row(r);
    const word* y = b.row(r);
    const word last = (x[w - 1] ^ y[w - 1]) & mask;
    xor_words3(d, x, y, w - 1);
    d[w - 1] = (d[w - 1] & ~mask) | last;
  }
}

void add_inplace(MatrixWindow dst, ConstWindow src) {
  require_same_shape(dst, src, "add");
  for (std::size_t r = 0; r < dst.nrows(); ++r) row_add(dst, r, src, r);
}

BitMatrix copy_out(ConstWindow w) {
  BitMatrix c(w.nrows(), w.ncols());
  copy_into(c, w);
  return c;
}

void copy_into(MatrixWindow dst, ConstWindow src) {
  require_same_shape(dst, src, "copy");
  const std::size_t w = dst.width();
  if (w == 0) return;
  const word mask = dst.last_mask();
  for (std::size_t r = 0; r < dst.nrows(); ++r) {
    word* d = dst.row(r);
    const word* s = src.row(r);
    std::copy(s, s + (w - 1), d);
    d[w - 1] = (d[w - 1] & ~mask) | (s[w - 1] & mask);
  }
}

BitMatrix augment(ConstWindow a, ConstWindow b) {
  if (a.nrows() != b.nrows()) throw dimension_error("augment: row counts differ");
  BitMatrix c(a.nrows(), a.ncols() + b.ncols());
  for (std::size_t r = 0; r < c.nrows(); ++r) {
    if (a.ncols() > 0) or_bits_at(c.row(r), 0, a.row(r), a.ncols());
    if (b.ncols() > 0) or_bits_at(c.row(r), a.ncols(), b.row(r), b.ncols());
  }
  return c;
}

BitMatrix stack(ConstWindow a, ConstWindow b) {
  if (a.ncols() != b.ncols()) throw dimension_error("stack: column counts differ");
  BitMatrix c(a.nrows() + b.nrows(), a.ncols());
  if (a.nrows() > 0) copy_into(c.window(0, 0, a.nrows(), a.ncols()), a);
  if (b.nrows() > 0) copy_into(c.window(a.nrows(), 0, b.nrows(), b.ncols()), b);
  return c;
}

BitMatrix transpose(ConstWindow a) {
  BitMatrix t(a.ncols(), a.nrows());
  const std::size_t aw = a.width();
  std::array<word, 64> block{};
  for (std::size_t rb = 0; rb < a.nrows(); rb += word_bits) {
    const std::size_t rows = std::min(word_bits, a.nrows() - rb);
    for (std::size_t wb = 0; wb < aw; ++wb) {
      const word mask = wb + 1 == aw ? a.last_mask() : ~word{0};
      for (std::size_t i = 0; i < rows; ++i) block[i] = a.row(rb + i)[wb] & mask;
      std::fill(block.begin() + static_cast<std::ptrdiff_t>(rows), block.end(), word{0});
      transpose64(block);
      const std::size_t cols = std::min(word_bits, a.ncols() - wb * word_bits);
      // block[j] now holds column wb*64+j of a, rows rb.. as bits; unused tail is zero.
      for (std::size_t j = 0; j < cols; ++j) t.row(wb * word_bits + j)[rb / word_bits] = block[j];
    }
  }
  return t;
}

bool equal(ConstWindow a, ConstWindow b) noexcept {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) return false;
  const std::size_t w = a.width();
  if (w == 0) return true;
  const word mask = a.last_mask();
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const word* x = a.row(r);
    const word* y = b.row(r);
    if (!std::equal(x, x + (w - 1), y)) return false;
    if (((x[w - 1] ^ y[w - 1]) & mask) != 0) return false;
  }
  return true;
}

bool is_zero(ConstWindow a) noexcept {
  const std::size_t w = a.width();
  if (w == 0) return true;
  const word mask = a.last_mask();
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    const word* x = a.row(r);
    for (std::size_t i = 0; i + 1 < w; ++i)
      if (x[i] != 0) return false;
    if ((x[w - 1] & mask) != 0) return false;
  }
  return true;
}

bool trailing_bits_clean(const BitMatrix& a) noexcept {
  const std::size_t w = a.width();
  if (w == 0) return true;
  const word mask = a.last_mask();
  for (std::size_t r = 0; r < a.nrows(); ++r)
    if ((a.row(r)[w - 1] & ~mask) != 0) return false;
  return true;
}

BitMatrix identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix random_matrix(std::size_t m, std::size_t n, std::uint64_t seed) {
  BitMatrix a(m, n);
  std::uint64_t state = seed;
  const std::size_t w = a.width();
  const word mask = a.last_mask();
  for (std::size_t r = 0; r < m; ++r) {
    word* row = a.row(r);
    for (std::size_t i = 0; i < w; ++i) row[i] = splitmix64(state);
    if (w > 0) row[w - 1] &= mask;
  }
  return a;
}

}  // namespace gf2
