#pragma once

#include <gf2/bitmatrix.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace gf2::test {

// Row-by-row list of 0/1 entries.
inline BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  BitMatrix a(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) a.set(r, c, rows[r][c] != 0);
  return a;
}

// Per-bit reference for read_bits.
inline unsigned read_bits_naive(ConstWindow a, std::size_t r, std::size_t sc, unsigned k) {
  unsigned v = 0;
  for (unsigned i = 0; i < k; ++i) v = (v << 1) | (a.get(r, sc + i) ? 1u : 0u);
  return v;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace gf2::test
