#include <doctest.h>

#include <gf2/cubic.hpp>
#include <gf2/stats.hpp>
#include <gf2/strassen.hpp>

#include "naive.hpp"
#include "support.hpp"

using namespace gf2;
using gf2::test::uniform;

namespace {

MulParams low_cutoff(std::size_t cutoff = 128) {
  MulParams p;
  p.cutoff = cutoff;
  p.bs = 64;
  p.k = 0;
  p.t = 8;
  return p;
}

}  // namespace

TEST_CASE("peel_split") {
  const PeelSplit a = peel_split(16384, 16384, 16384, 4096);
  CHECK(a.depth == 2);
  CHECK(a.m == 16384);
  CHECK(a.l == 16384);
  CHECK(a.n == 16384);

  const PeelSplit b = peel_split(16385, 16385, 16385, 4096);
  CHECK(b.depth == 2);
  CHECK(b.m == 16384);
  CHECK(b.n == 16384);

  const PeelSplit c = peel_split(100, 100, 100, 4096);
  CHECK(c.fallback());
  CHECK(c.m == 0);

  // Mixed shapes: the narrowest dimension bounds the depth.
  const PeelSplit d = peel_split(5000, 1100, 3000, 256);
  CHECK(d.depth == 2);
  CHECK(d.m == 4864);
  CHECK(d.l == 1024);
  CHECK(d.n == 2816);

  // Halving 200 once leaves 64 < 128 after rounding.
  CHECK(peel_split(200, 200, 200, 128).fallback());
  CHECK(peel_split(1023, 1023, 1023, 128).depth == 2);
  CHECK(peel_split(1023, 1023, 1023, 128).m == 768);
}

TEST_CASE("peel_split properties") {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t m = uniform(rng, 1, 20000);
    const std::size_t l = uniform(rng, 1, 20000);
    const std::size_t n = uniform(rng, 1, 20000);
    const std::size_t cutoff = 64 * uniform(rng, 1, 40);
    const PeelSplit s = peel_split(m, l, n, cutoff);
    if (s.fallback()) continue;
    const std::size_t unit = std::size_t{64} << s.depth;
    for (auto [orig, peeled] : {std::pair{m, s.m}, std::pair{l, s.l}, std::pair{n, s.n}}) {
      CHECK(peeled <= orig);
      CHECK(peeled % unit == 0);
      CHECK(orig - peeled < unit);
      CHECK((peeled >> s.depth) >= cutoff);
    }
    // One more level would drop some dimension below the cutoff.
    const std::size_t unit2 = unit * 2;
    const bool deeper = m / unit2 * 64 >= cutoff && l / unit2 * 64 >= cutoff && n / unit2 * 64 >= cutoff;
    CHECK_FALSE(deeper);
  }
}

TEST_CASE("schedule_winograd on a 2x2 block matrix of 64x64 quadrants") {
  const BitMatrix a = random_matrix(128, 128, 1);
  const BitMatrix b = random_matrix(128, 128, 2);
  BitMatrix c(128, 128);
  reset_counters();
  WinogradScratch temps(128, 128, 128, 1);
  schedule_winograd(a, b, c, temps, low_cutoff(64));
  CHECK(c == mul_cubic(a, b));
  CHECK(counters().winograd_steps == 1);
  CHECK(counters().winograd_products == 7);
  CHECK(counters().winograd_additions == 15);
  CHECK(counters().winograd_base_cases == 7);
  CHECK(counters().winograd_temporaries == 2);
}

TEST_CASE("schedule_winograd counts per level over three levels") {
  const BitMatrix a = random_matrix(512, 1024, 3);
  const BitMatrix b = random_matrix(1024, 512, 4);
  BitMatrix c(512, 512);
  reset_counters();
  WinogradScratch temps(512, 1024, 512, 3);
  schedule_winograd(a, b, c, temps, low_cutoff(64));
  CHECK(c == mul_cubic(a, b));
  // 1 + 7 + 49 level invocations, each with 7 products and 15 additions.
  CHECK(counters().winograd_steps == 57);
  CHECK(counters().winograd_products == 7 * 57);
  CHECK(counters().winograd_additions == 15 * 57);
  CHECK(counters().winograd_base_cases == 343);
  CHECK(counters().winograd_temporaries == 2 * 3);
  CHECK(counters().winograd_levels == 3);
}

TEST_CASE("schedule_winograd rejects non-conforming dimensions") {
  const BitMatrix a = random_matrix(192, 128, 1);
  const BitMatrix b = random_matrix(128, 128, 2);
  BitMatrix c(192, 128);
  WinogradScratch temps(192, 128, 128, 1);
  CHECK_THROWS_AS(schedule_winograd(a, b, c, temps, low_cutoff(64)), dimension_error);
}

TEST_CASE("peel_fixup") {
  const MulParams p = low_cutoff();
  SUBCASE("conforming dimensions need no correction") {
    const BitMatrix a = random_matrix(128, 128, 1);
    const BitMatrix b = random_matrix(128, 128, 2);
    BitMatrix c = mul_cubic(a, b);
    const BitMatrix before = c;
    peel_fixup(c, a, b, 128, 128, 128, p);
    CHECK(c == before);
  }
  SUBCASE("one extra row") {
    const BitMatrix a = random_matrix(65, 64, 3);
    const BitMatrix b = random_matrix(64, 64, 4);
    BitMatrix c(65, 64);
    copy_into(c.window(0, 0, 64, 64), mul_cubic(a.window(0, 0, 64, 64), b));
    peel_fixup(c, a, b, 64, 64, 64, p);
    CHECK(equal(c.window(64, 0, 1, 64), mul_cubic(a.window(64, 0, 1, 64), b)));
    CHECK(c == oracle::naive_product(a, b));
  }
  SUBCASE("all three corrections") {
    const BitMatrix a = random_matrix(100, 70, 5);
    const BitMatrix b = random_matrix(70, 130, 6);
    BitMatrix c(100, 130);
    copy_into(c.window(0, 0, 64, 64), mul_cubic(a.window(0, 0, 64, 64), b.window(0, 0, 64, 64)));
    reset_counters();
    peel_fixup(c, a, b, 64, 64, 64, p);
    CHECK(c == oracle::naive_product(a, b));
    CHECK(counters().strassen_calls == 0);
  }
  SUBCASE("inconsistent sizes") {
    const BitMatrix a = random_matrix(10, 10, 1);
    BitMatrix c(10, 10);
    CHECK_THROWS_AS(peel_fixup(c, a, a, 11, 10, 10, p), dimension_error);
    CHECK_THROWS_AS(peel_fixup(c, a, a, 10, 5, 10, p), alignment_error);
  }
}

TEST_CASE("mul_strassen small and structured cases") {
  const MulParams p = low_cutoff();
  CHECK(mul_strassen(identity(512), identity(512), p) == identity(512));

  const BitMatrix a = random_matrix(1024, 1024, 7);
  const BitMatrix b = random_matrix(1024, 1024, 8);
  reset_counters();
  CHECK(mul_strassen(a, b, p) == mul_cubic(a, b));
  CHECK(counters().winograd_levels == 3);

  for (std::size_t n : {1023, 1024, 1025}) {
    const BitMatrix x = random_matrix(n, n, n);
    const BitMatrix y = random_matrix(n, n, n + 1);
    CHECK(mul_strassen(x, y, p) == oracle::naive_product(x, y));
  }

  // Narrow B goes to the cubic routine; empty operands give zero products.
  const BitMatrix tall = random_matrix(700, 700, 9);
  const BitMatrix thin = random_matrix(700, 20, 10);
  CHECK(mul_strassen(tall, thin, p) == mul_cubic(tall, thin));
  CHECK(mul_strassen(BitMatrix(5, 0), BitMatrix(0, 300), p) == BitMatrix(5, 300));
  CHECK_THROWS_AS(mul_strassen(tall, tall.window(0, 0, 699, 700), p), dimension_error);
}

TEST_CASE("mul_strassen equals mul_cubic on random shapes with several recursion levels") {
  const MulParams p = low_cutoff();
  std::mt19937_64 rng(2718);
  std::uint64_t recursed = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t m = uniform(rng, 1, 1500);
    const std::size_t l = uniform(rng, 1, 1500);
    const std::size_t n = uniform(rng, 1, 1500);
    const BitMatrix a = random_matrix(m, l, rng());
    const BitMatrix b = random_matrix(l, n, rng());
    reset_counters();
    const BitMatrix c = mul_strassen(a, b, p);
    REQUIRE(c == mul_cubic(a, b));
    REQUIRE(trailing_bits_clean(c));
    const OpCounters& ops = counters();
    CHECK(ops.strassen_calls_in_fixup == 0);
    CHECK(ops.winograd_temporaries == 2 * ops.winograd_levels);
    CHECK(ops.winograd_products == 7 * ops.winograd_steps);
    CHECK(ops.winograd_additions == 15 * ops.winograd_steps);
    recursed += ops.winograd_levels > 0;
  }
  CHECK(recursed > 20);
}

TEST_CASE("MulParams validation") {
  MulParams p;
  CHECK_NOTHROW(p.validate());
  p.cutoff = 32;
  CHECK_THROWS_AS(p.validate(), parameter_error);
  p = MulParams{};
  p.bs = p.cutoff + 1;
  CHECK_THROWS_AS(p.validate(), parameter_error);
  p = MulParams{};
  p.t = 9;
  CHECK_THROWS_AS(p.validate(), parameter_error);
  p.t = 0;
  CHECK_THROWS_AS(p.validate(), parameter_error);
}
