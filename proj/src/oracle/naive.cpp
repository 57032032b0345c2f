#include "naive.hpp"

#include <cstdint>
#include <vector>

namespace gf2::oracle {

BitMatrix naive_product(ConstWindow a, ConstWindow b) {
  if (a.ncols() != b.nrows()) throw dimension_error("naive_product: inner dimensions differ");
  const std::size_t m = a.nrows();
  const std::size_t l = a.ncols();
  const std::size_t n = b.ncols();

  std::vector<std::uint8_t> ua(m * l);
  std::vector<std::uint8_t> ub(l * n);
  std::vector<std::uint8_t> uc(m * n, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < l; ++j) ua[i * l + j] = a.get(i, j) ? 1 : 0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < n; ++j) ub[i * n + j] = b.get(i, j) ? 1 : 0;

  // c[i][j] = sum_p a[i][p] * b[p][j] mod 2
  for (std::size_t i = 0; i < m; ++i) {
    std::uint8_t* crow = uc.data() + i * n;
    for (std::size_t p = 0; p < l; ++p) {
      const std::uint8_t aip = ua[i * l + p];
      const std::uint8_t* brow = ub.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] ^= static_cast<std::uint8_t>(aip & brow[j]);
    }
  }

  BitMatrix c(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (uc[i * n + j]) c.set(i, j, true);
  return c;
}

}  // namespace gf2::oracle
