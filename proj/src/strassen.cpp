#include <gf2/strassen.hpp>

#include <gf2/cubic.hpp>
#include <gf2/graycode.hpp>
#include <gf2/m4rm.hpp>
#include <gf2/tuning.hpp>

#include <algorithm>
#include <array>
#include <string>

namespace gf2 {

namespace {

thread_local bool t_in_fixup = false;

struct FixupScope {
  bool saved = t_in_fixup;
  FixupScope() { t_in_fixup = true; }
  ~FixupScope() { t_in_fixup = saved; }
  FixupScope(const FixupScope&) = delete;
  FixupScope& operator=(const FixupScope&) = delete;
};

StripeSpec base_spec(const MulParams& params, std::size_t ncols) {
  return StripeSpec{effective_k(params, ncols), params.t, params.bs};
}

template <class W>
auto split(W w) {
  const std::size_t h = w.nrows() / 2;
  const std::size_t v = w.ncols() / 2;
  return std::array<W, 4>{w.window(0, 0, h, v), w.window(0, v, h, v), w.window(h, 0, h, v), w.window(h, v, h, v)};
}

void winograd_level(ConstWindow a, ConstWindow b, MatrixWindow c, WinogradScratch& temps, unsigned level,
                    const MulParams& params);

// c = a * b at the given recursion level.
void product(ConstWindow a, ConstWindow b, MatrixWindow c, WinogradScratch& temps, unsigned level,
             const MulParams& params) {
  if (level < temps.depth()) {
    winograd_level(a, b, c, temps, level, params);
    return;
  }
  // Base case: the product is formed in a contiguous buffer and copied into
  // the target window.
  BitMatrix& buf = temps.base();
  buf.clear();
  addmul_m4rm(buf, a, b, base_spec(params, b.ncols()));
  copy_into(c, buf);
  ++counters().winograd_base_cases;
}

void winograd_level(ConstWindow a, ConstWindow b, MatrixWindow c, WinogradScratch& temps, unsigned level,
                    const MulParams& params) {
  if (a.nrows() % 128 != 0 || a.ncols() % 128 != 0 || b.ncols() % 128 != 0)
    throw dimension_error("schedule_winograd: dimensions must be even multiples of 64");

  const auto [a_nw, a_ne, a_sw, a_se] = split(a);
  const auto [b_nw, b_ne, b_sw, b_se] = split(b);
  const auto [c_nw, c_ne, c_sw, c_se] = split(c);
  const std::size_t mq = a_nw.nrows();
  const std::size_t lq = a_nw.ncols();
  const std::size_t nq = b_nw.ncols();

  BitMatrix& xbuf = temps.x(level);
  BitMatrix& ybuf = temps.y(level);
  const MatrixWindow xs = xbuf.window(0, 0, mq, lq);  // S_i
  const MatrixWindow xp = xbuf.window(0, 0, mq, nq);  // P_0
  const MatrixWindow yt = ybuf.window(0, 0, lq, nq);  // T_i

  auto& ops = counters();
  ++ops.winograd_steps;
  auto add2 = [&](MatrixWindow dst, ConstWindow x, ConstWindow y) {
    add_into(dst, x, y);
    ++ops.winograd_additions;
  };
  auto mul = [&](ConstWindow x, ConstWindow y, MatrixWindow dst) {
    ++ops.winograd_products;
    product(x, y, dst, temps, level + 1, params);
  };

  // Subtraction is addition in characteristic 2. Names follow
  // S0..S3, T0..T3, P0..P6, U0..U6 of the Winograd formulation.
  add2(xs, a_nw, a_sw);    // S2 = A_NW - A_SW
  add2(yt, b_se, b_ne);    // T2 = B_SE - B_NE
  mul(xs, yt, c_sw);       // P6 = S2 T2
  add2(xs, a_sw, a_se);    // S0 = A_SW + A_SE
  add2(yt, b_ne, b_nw);    // T0 = B_NE - B_NW
  mul(xs, yt, c_se);       // P4 = S0 T0
  add2(yt, b_se, yt);      // T1 = B_SE - T0
  add2(xs, xs, a_nw);      // S1 = S0 - A_NW
  mul(xs, yt, c_ne);       // P5 = S1 T1
  add2(xs, a_ne, xs);      // S3 = A_NE - S1
  mul(xs, b_se, c_nw);     // P2 = S3 B_SE
  mul(a_nw, b_nw, xp);     // P0 = A_NW B_NW
  add2(c_ne, xp, c_ne);    // U1 = P0 + P5
  add2(c_sw, c_ne, c_sw);  // U2 = U1 + P6
  add2(c_ne, c_ne, c_se);  // U3 = U1 + P4
  add2(c_se, c_sw, c_se);  // U6 = U2 + P4
  add2(c_ne, c_ne, c_nw);  // U4 = U3 + P2
  add2(yt, yt, b_sw);      // T3 = T1 - B_SW
  mul(a_se, yt, c_nw);     // P3 = A_SE T3
  add2(c_sw, c_sw, c_nw);  // U5 = U2 - P3
  mul(a_ne, b_sw, c_nw);   // P1 = A_NE B_SW
  add2(c_nw, xp, c_nw);    // U0 = P0 + P1
}

}  // namespace

void MulParams::validate() const {
  if (cutoff < word_bits) throw parameter_error("cutoff must be at least 64, got " + std::to_string(cutoff));
  if (bs < 1 || bs > cutoff) throw parameter_error("block size must be in 1..cutoff, got " + std::to_string(bs));
  if (t < 1 || t > max_tables) throw parameter_error("t must be in 1..8, got " + std::to_string(t));
  if (k > max_gray_bits) throw parameter_error("k must be at most 16, got " + std::to_string(k));
}

PeelSplit peel_split(std::size_t m, std::size_t l, std::size_t n, std::size_t cutoff) {
  const std::size_t floor_dim = std::max<std::size_t>(cutoff, word_bits);
  auto fits = [&](unsigned d) {
    for (std::size_t x : {m, l, n})
      if ((x >> d) / word_bits * word_bits < floor_dim) return false;
    return true;
  };
  unsigned depth = 0;
  while (depth < 48 && fits(depth + 1)) ++depth;
  if (depth == 0) return {};
  const std::size_t unit = word_bits << depth;
  return {m / unit * unit, l / unit * unit, n / unit * unit, depth};
}

WinogradScratch::WinogradScratch(std::size_t m, std::size_t l, std::size_t n, unsigned depth) : depth_(depth) {
  x_.reserve(depth);
  y_.reserve(depth);
  for (unsigned level = 0; level < depth; ++level) {
    const std::size_t mq = m >> (level + 1);
    const std::size_t lq = l >> (level + 1);
    const std::size_t nq = n >> (level + 1);
    x_.emplace_back(mq, std::max(lq, nq));
    y_.emplace_back(lq, nq);
    counters().winograd_temporaries += 2;
    ++counters().winograd_levels;
  }
  base_ = BitMatrix(m >> depth, n >> depth);
}

void schedule_winograd(ConstWindow a, ConstWindow b, MatrixWindow c, WinogradScratch& temps,
                       const MulParams& params) {
  if (a.ncols() != b.nrows() || c.nrows() != a.nrows() || c.ncols() != b.ncols())
    throw dimension_error("schedule_winograd: shape mismatch");
  product(a, b, c, temps, 0, params);
}

BitMatrix mul_base(ConstWindow a, ConstWindow b, const MulParams& params) {
  if (b.ncols() < word_bits) return mul_cubic(a, b);
  BitMatrix c(a.nrows(), b.ncols());
  addmul_m4rm(c, a, b, base_spec(params, b.ncols()));
  return c;
}

void peel_fixup(MatrixWindow c, ConstWindow a, ConstWindow b, std::size_t mp, std::size_t lp, std::size_t np,
                const MulParams& params) {
  const std::size_t m = a.nrows();
  const std::size_t l = a.ncols();
  const std::size_t n = b.ncols();
  if (b.nrows() != l || c.nrows() != m || c.ncols() != n) throw dimension_error("peel_fixup: shape mismatch");
  if (mp > m || lp > l || np > n) throw dimension_error("peel_fixup: peeled sizes exceed operands");

  FixupScope scope;
  ++counters().peel_fixups;
  if (lp < l && mp > 0 && np > 0) {
    const BitMatrix extra = mul_base(a.window(0, lp, mp, l - lp), b.window(lp, 0, l - lp, np), params);
    add_inplace(c.window(0, 0, mp, np), extra);
  }
  if (mp < m) copy_into(c.window(mp, 0, m - mp, n), mul_base(a.window(mp, 0, m - mp, l), b, params));
  if (np < n && mp > 0)
    copy_into(c.window(0, np, mp, n - np), mul_base(a.window(0, 0, mp, l), b.window(0, np, l, n - np), params));
}

BitMatrix mul_strassen(ConstWindow a, ConstWindow b, const MulParams& params) {
  if (a.ncols() != b.nrows())
    throw dimension_error("multiply: inner dimensions differ (" + std::to_string(a.ncols()) + " vs " +
                          std::to_string(b.nrows()) + ")");
  params.validate();
  auto& ops = counters();
  ++ops.strassen_calls;
  if (t_in_fixup) ++ops.strassen_calls_in_fixup;

  const std::size_t m = a.nrows();
  const std::size_t l = a.ncols();
  const std::size_t n = b.ncols();
  if (m == 0 || l == 0 || n == 0) return BitMatrix(m, n);
  if (n < word_bits) return mul_cubic(a, b);
  if (std::min({m, l, n}) <= params.cutoff) return mul_base(a, b, params);

  const PeelSplit split = peel_split(m, l, n, params.cutoff);
  if (split.fallback()) return mul_base(a, b, params);

  BitMatrix c(m, n);
  {
    WinogradScratch temps(split.m, split.l, split.n, split.depth);
    schedule_winograd(a.window(0, 0, split.m, split.l), b.window(0, 0, split.l, split.n),
                      c.window(0, 0, split.m, split.n), temps, params);
  }
  peel_fixup(c, a, b, split.m, split.l, split.n, params);
  return c;
}

}  // namespace gf2
