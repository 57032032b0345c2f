#pragma once

#include <gf2/bitmatrix.hpp>

#include <cstddef>
#include <limits>

namespace gf2 {

inline constexpr unsigned max_tables = 8;

// Stripe layout of a Four Russians product: stripes of k columns of A (k rows
// of B), t tables built per stripe group, and row blocks of block_rows rows.
struct StripeSpec {
  unsigned k = 8;
  unsigned t = 1;
  std::size_t block_rows = std::numeric_limits<std::size_t>::max();

  // Throws parameter_error on k outside 1..16, t outside 1..8 or a zero block.
  void validate() const;
};

// One table per stripe; every stripe sweeps all rows of A. A ragged final
// stripe (k not dividing l) uses a table of width l mod k.
BitMatrix mul_m4rm(ConstWindow a, ConstWindow b, unsigned k);

// Row blocks of bs rows are finished against all stripes before moving on;
// tables are rebuilt per block.
BitMatrix mul_m4rm_blocked(ConstWindow a, ConstWindow b, unsigned k, std::size_t bs);

// t tables cover t*k consecutive rows of B; each row of C receives one fused
// addition of t table rows per stripe group.
BitMatrix mul_m4rm_multitable(ConstWindow a, ConstWindow b, unsigned k, unsigned t, std::size_t bs);

// c += a * b with the blocked multi-table loop.
void addmul_m4rm(MatrixWindow c, ConstWindow a, ConstWindow b, const StripeSpec& spec);

}  // namespace gf2
