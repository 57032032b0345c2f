#include <gf2/graycode.hpp>
#include <gf2/m4rm.hpp>
#include <gf2/rowops.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace gf2 {

namespace {

void check_product_shapes(ConstWindow a, ConstWindow b) {
  if (a.ncols() != b.nrows())
    throw dimension_error("m4rm: inner dimensions differ (" + std::to_string(a.ncols()) + " vs " +
                          std::to_string(b.nrows()) + ")");
}

}  // namespace

void StripeSpec::validate() const {
  if (k < 1 || k > max_gray_bits) throw parameter_error("k must be in 1..16, got " + std::to_string(k));
  if (t < 1 || t > max_tables) throw parameter_error("t must be in 1..8, got " + std::to_string(t));
  if (block_rows == 0) throw parameter_error("block size must be positive");
}

BitMatrix mul_m4rm(ConstWindow a, ConstWindow b, unsigned k) {
  check_product_shapes(a, b);
  StripeSpec{k}.validate();
  const std::size_t m = a.nrows();
  const std::size_t l = a.ncols();
  const std::size_t n = b.ncols();
  BitMatrix c(m, n);
  if (m == 0 || l == 0 || n == 0) return c;

  CombinationTable table(k, n);
  const std::size_t w = c.width();
  for (std::size_t start = 0; start < l; start += k) {
    const auto width = static_cast<unsigned>(std::min<std::size_t>(k, l - start));
    make_table(b, start, width, table);
    for (std::size_t j = 0; j < m; ++j) xor_words(c.row(j), table.row(read_bits(a.row(j), start, width)), w);
  }
  return c;
}

BitMatrix mul_m4rm_blocked(ConstWindow a, ConstWindow b, unsigned k, std::size_t bs) {
  return mul_m4rm_multitable(a, b, k, 1, bs);
}

BitMatrix mul_m4rm_multitable(ConstWindow a, ConstWindow b, unsigned k, unsigned t, std::size_t bs) {
  check_product_shapes(a, b);
  BitMatrix c(a.nrows(), b.ncols());
  addmul_m4rm(c, a, b, StripeSpec{k, t, bs});
  return c;
}

void addmul_m4rm(MatrixWindow c, ConstWindow a, ConstWindow b, const StripeSpec& spec) {
  check_product_shapes(a, b);
  if (c.nrows() != a.nrows() || c.ncols() != b.ncols()) throw dimension_error("m4rm: target shape mismatch");
  spec.validate();
  const std::size_t m = a.nrows();
  const std::size_t l = a.ncols();
  const std::size_t n = b.ncols();
  if (m == 0 || l == 0 || n == 0) return;

  const unsigned k = spec.k;
  const unsigned t = spec.t;
  const std::size_t group = std::size_t{t} * k;
  const std::size_t w = c.width();
  std::vector<CombinationTable> tables;
  tables.reserve(t);
  for (unsigned u = 0; u < std::min<std::size_t>(t, (l + k - 1) / k); ++u) tables.emplace_back(k, n);

  std::array<std::size_t, max_tables> starts{};
  std::array<unsigned, max_tables> widths{};
  std::array<const word*, max_tables> srcs{};
  auto& ops = counters();

  for (std::size_t r0 = 0; r0 < m; r0 += spec.block_rows) {
    const std::size_t r1 = spec.block_rows >= m - r0 ? m : r0 + spec.block_rows;
    for (std::size_t s = 0; s < l; s += group) {
      unsigned used = 0;
      for (unsigned u = 0; u < t; ++u) {
        const std::size_t start = s + std::size_t{u} * k;
        if (start >= l) break;
        starts[u] = start;
        widths[u] = static_cast<unsigned>(std::min<std::size_t>(k, l - start));
        make_table(b, start, widths[u], tables[u]);
        ++used;
      }
      for (std::size_t j = r0; j < r1; ++j) {
        const word* arow = a.row(j);
        for (unsigned u = 0; u < used; ++u) srcs[u] = tables[u].row(read_bits(arow, starts[u], widths[u]));
        xor_words_fused(c.row(j), srcs.data(), static_cast<int>(used), w);
      }
      ++ops.m4rm_stripe_groups;
      ops.m4rm_row_writes += r1 - r0;
    }
  }
}

}  // namespace gf2
