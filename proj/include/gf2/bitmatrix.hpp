#pragma once

#include <gf2/errors.hpp>
#include <gf2/stats.hpp>

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace gf2 {

using word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

// Column c of a row lives in word c / 64 at bit position 63 - c % 64, i.e.
// the leftmost column is the most significant bit. The file format and
// read_bits both depend on this order.
constexpr std::size_t words_for(std::size_t ncols) noexcept { return (ncols + word_bits - 1) / word_bits; }

constexpr word column_bit(std::size_t c) noexcept { return word{1} << (word_bits - 1 - c % word_bits); }

// Mask of the valid bits in the last word of a row with ncols columns.
constexpr word last_word_mask(std::size_t ncols) noexcept {
  const std::size_t r = ncols % word_bits;
  return r == 0 ? ~word{0} : ~word{0} << (word_bits - r);
}

// Extracts k (1..16) consecutive bits starting at column sc, first column as
// the most significant bit of the result. The run may straddle two words.
inline unsigned read_bits(const word* row, std::size_t sc, unsigned k) noexcept {
  assert(k >= 1 && k <= 16);
  const std::size_t w = sc / word_bits;
  const unsigned off = static_cast<unsigned>(sc % word_bits);
  word bits = row[w] << off;
  if (off + k > word_bits) bits |= row[w + 1] >> (word_bits - off);
  return static_cast<unsigned>(bits >> (word_bits - k));
}

template <class Word>
class BasicWindow;

using MatrixWindow = BasicWindow<word>;
using ConstWindow = BasicWindow<const word>;

// Owned, bit-packed, row-major matrix over F2. Every row occupies width()
// words; the bits past ncols() in the last word are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t nrows, std::size_t ncols);

  BitMatrix(const BitMatrix& other);
  BitMatrix(BitMatrix&& other) noexcept;
  BitMatrix& operator=(const BitMatrix& other);
  BitMatrix& operator=(BitMatrix&& other) noexcept;
  ~BitMatrix();

  std::size_t nrows() const noexcept { return nrows_; }
  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t width() const noexcept { return width_; }
  bool empty() const noexcept { return nrows_ == 0 || ncols_ == 0; }
  word last_mask() const noexcept { return last_word_mask(ncols_); }

  word* row(std::size_t r) noexcept {
    assert(r < nrows_);
    return data_.data() + row_index_[r];
  }
  const word* row(std::size_t r) const noexcept {
    assert(r < nrows_);
    return data_.data() + row_index_[r];
  }

  bool get(std::size_t r, std::size_t c) const noexcept {
    assert(r < nrows_ && c < ncols_);
    return (row(r)[c / word_bits] & column_bit(c)) != 0;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept {
    assert(r < nrows_ && c < ncols_);
    word& w = row(r)[c / word_bits];
    w = v ? (w | column_bit(c)) : (w & ~column_bit(c));
  }
  void flip(std::size_t r, std::size_t c) noexcept {
    assert(r < nrows_ && c < ncols_);
    row(r)[c / word_bits] ^= column_bit(c);
  }

  // Word offsets of the first word of each row in the data buffer.
  std::span<const std::size_t> row_index() const noexcept { return row_index_; }
  std::span<word> data() noexcept { return data_; }
  std::span<const word> data() const noexcept { return data_; }

  void clear() noexcept;
  // Swaps two rows by exchanging their row_index entries.
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  MatrixWindow view() noexcept;
  ConstWindow view() const noexcept;
  MatrixWindow window(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n);
  ConstWindow window(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> row_index_;
  std::vector<word> data_;
};

// Non-owning view of a rectangular region of a BitMatrix. The first column
// must sit on a word border; the right edge may be ragged, in which case the
// bits of the last word beyond ncols() belong to the parent and are never
// modified through the window.
template <class Word>
class BasicWindow {
  static constexpr bool is_const = std::is_const_v<Word>;
  using Matrix = std::conditional_t<is_const, const BitMatrix, BitMatrix>;

 public:
  BasicWindow() = default;
  BasicWindow(Matrix& m) noexcept  // NOLINT(google-explicit-constructor)
      : base_(m.data().data()), rows_(m.row_index().data()), nrows_(m.nrows()), ncols_(m.ncols()) {}

  template <class Other>
    requires(is_const && !std::is_const_v<Other>)
  BasicWindow(const BasicWindow<Other>& w) noexcept  // NOLINT(google-explicit-constructor)
      : base_(w.base_), rows_(w.rows_), word_offset_(w.word_offset_), nrows_(w.nrows_), ncols_(w.ncols_) {}

  std::size_t nrows() const noexcept { return nrows_; }
  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t width() const noexcept { return words_for(ncols_); }
  bool empty() const noexcept { return nrows_ == 0 || ncols_ == 0; }
  word last_mask() const noexcept { return last_word_mask(ncols_); }

  Word* row(std::size_t r) const noexcept {
    assert(r < nrows_);
    return base_ + rows_[r] + word_offset_;
  }

  bool get(std::size_t r, std::size_t c) const noexcept {
    assert(r < nrows_ && c < ncols_);
    return (row(r)[c / word_bits] & column_bit(c)) != 0;
  }
  void set(std::size_t r, std::size_t c, bool v) const noexcept
    requires(!is_const)
  {
    assert(r < nrows_ && c < ncols_);
    word& w = row(r)[c / word_bits];
    w = v ? (w | column_bit(c)) : (w & ~column_bit(c));
  }

  // Zeroes the window's bits, leaving parent bits outside it alone.
  void clear() const noexcept
    requires(!is_const);

  BasicWindow window(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) const {
    if (c0 % word_bits != 0) throw alignment_error("window column offset must be a multiple of 64");
    if (r0 + m > nrows_ || c0 + n > ncols_) throw dimension_error("window exceeds parent bounds");
    BasicWindow w = *this;
    w.rows_ = rows_ + r0;
    w.word_offset_ = word_offset_ + c0 / word_bits;
    w.nrows_ = m;
    w.ncols_ = n;
    return w;
  }

 private:
  template <class>
  friend class BasicWindow;

  Word* base_ = nullptr;
  const std::size_t* rows_ = nullptr;
  std::size_t word_offset_ = 0;
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
};

template <class Word>
void BasicWindow<Word>::clear() const noexcept
  requires(!is_const)
{
  const std::size_t w = width();
  if (w == 0) return;
  const word mask = last_mask();
  for (std::size_t r = 0; r < nrows_; ++r) {
    word* p = row(r);
    for (std::size_t i = 0; i + 1 < w; ++i) p[i] = 0;
    p[w - 1] &= ~mask;
  }
}

inline MatrixWindow BitMatrix::view() noexcept { return MatrixWindow(*this); }
inline ConstWindow BitMatrix::view() const noexcept { return ConstWindow(*this); }
inline MatrixWindow BitMatrix::window(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) {
  return view().window(r0, c0, m, n);
}
inline ConstWindow BitMatrix::window(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) const {
  return view().window(r0, c0, m, n);
}

inline unsigned read_bits(ConstWindow a, std::size_t r, std::size_t sc, unsigned k) noexcept {
  assert(sc + k <= a.ncols());
  return read_bits(a.row(r), sc, k);
}

// Row r1 of c ^= row r2 of s.
void row_add(MatrixWindow c, std::size_t r1, ConstWindow s, std::size_t r2);

BitMatrix add(ConstWindow a, ConstWindow b);
// dst = a + b; dst may alias a or b.
void add_into(MatrixWindow dst, ConstWindow a, ConstWindow b);
// dst += src
void add_inplace(MatrixWindow dst, ConstWindow src);

BitMatrix copy_out(ConstWindow w);
void copy_into(MatrixWindow dst, ConstWindow src);

BitMatrix augment(ConstWindow a, ConstWindow b);
BitMatrix stack(ConstWindow a, ConstWindow b);
BitMatrix transpose(ConstWindow a);

bool equal(ConstWindow a, ConstWindow b) noexcept;
bool is_zero(ConstWindow a) noexcept;
bool trailing_bits_clean(const BitMatrix& a) noexcept;

BitMatrix identity(std::size_t n);
// Deterministic in seed; each entry is an independent fair bit.
BitMatrix random_matrix(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace gf2
