#pragma once

#include <gf2/bitmatrix.hpp>

#include <cstddef>
#include <vector>

namespace gf2 {

// Tuning bundle for the full multiplication stack. cutoff is the dimension at
// or below which recursion hands over to M4RM; k == 0 means "derive from bs
// and the L1 size" at the base case.
struct MulParams {
  std::size_t cutoff = 2048;
  std::size_t bs = 1024;
  unsigned k = 0;
  unsigned t = 8;
  std::size_t l1_bytes = 32 * 1024;
  std::size_t l2_bytes = 1024 * 1024;

  // cutoff >= 64, 1 <= bs <= cutoff, 1 <= t <= 8, k <= 16.
  void validate() const;
};

// Conforming dimensions for depth levels of recursion. depth == 0 (and all
// dimensions zero) means the operands are too small to recurse on.
struct PeelSplit {
  std::size_t m = 0;
  std::size_t l = 0;
  std::size_t n = 0;
  unsigned depth = 0;

  bool fallback() const noexcept { return depth == 0; }
};

// depth is the largest d for which every dimension, rounded down to a
// multiple of 2^d * 64 and halved d times, is still >= cutoff; the split
// dimensions are those rounded values.
PeelSplit peel_split(std::size_t m, std::size_t l, std::size_t n, std::size_t cutoff);

// Two quadrant temporaries per recursion level plus one contiguous buffer
// for the base-case products, all allocated up front.
class WinogradScratch {
 public:
  WinogradScratch(std::size_t m, std::size_t l, std::size_t n, unsigned depth);

  unsigned depth() const noexcept { return depth_; }
  BitMatrix& x(unsigned level) { return x_[level]; }
  BitMatrix& y(unsigned level) { return y_[level]; }
  BitMatrix& base() { return base_; }

 private:
  unsigned depth_;
  std::vector<BitMatrix> x_;
  std::vector<BitMatrix> y_;
  BitMatrix base_;
};

// C = A * B over windows whose dimensions are multiples of 2^depth * 64.
// Seven half-size products and fifteen quadrant additions per level; the
// intermediates live in the level's two scratch buffers and C's quadrants.
void schedule_winograd(ConstWindow a, ConstWindow b, MatrixWindow c, WinogradScratch& temps, const MulParams& params);

// Completes C = A * B given that the leading m' x n' block of C already holds
// A[0..m', 0..l'] * B[0..l', 0..n']. Uses M4RM or cubic products only.
void peel_fixup(MatrixWindow c, ConstWindow a, ConstWindow b, std::size_t mp, std::size_t lp, std::size_t np,
                const MulParams& params);

// Non-recursive product: cubic when B is narrower than a word, else M4RM
// with the multi-table blocked loop.
BitMatrix mul_base(ConstWindow a, ConstWindow b, const MulParams& params);

// Strassen-Winograd with peeling and crossover to M4RM.
BitMatrix mul_strassen(ConstWindow a, ConstWindow b, const MulParams& params);

// Default entry point: the full dispatch stack.
inline BitMatrix multiply(ConstWindow a, ConstWindow b, const MulParams& params = {}) {
  return mul_strassen(a, b, params);
}

}  // namespace gf2
