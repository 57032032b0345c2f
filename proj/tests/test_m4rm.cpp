#include <doctest.h>

#include <gf2/cubic.hpp>
#include <gf2/m4rm.hpp>
#include <gf2/stats.hpp>

#include "naive.hpp"
#include "support.hpp"

using namespace gf2;
using gf2::test::from_rows;
using gf2::test::uniform;

TEST_CASE("mul_m4rm on the 2x2 stripe example") {
  const BitMatrix a = from_rows({{1, 0}, {1, 1}});
  const BitMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(mul_m4rm(a, b, 1) == from_rows({{0, 1}, {1, 1}}));
  CHECK(mul_m4rm(a, b, 2) == from_rows({{0, 1}, {1, 1}}));
}

TEST_CASE("mul_m4rm identity and cubic agreement for every k") {
  const BitMatrix r = random_matrix(100, 100, 5);
  for (unsigned k = 1; k <= 8; ++k) CHECK(mul_m4rm(r, identity(100), k) == r);

  const BitMatrix a = random_matrix(129, 100, 6);
  const BitMatrix b = random_matrix(100, 193, 7);
  const BitMatrix expected = mul_cubic(a, b);
  for (unsigned k = 1; k <= 10; ++k) CHECK(mul_m4rm(a, b, k) == expected);
  CHECK(mul_m4rm(a, b, 16) == expected);
}

TEST_CASE("mul_m4rm_blocked equals mul_m4rm for all block sizes") {
  const BitMatrix a = random_matrix(150, 150, 8);
  const BitMatrix b = random_matrix(150, 150, 9);
  const BitMatrix plain = mul_m4rm(a, b, 6);
  for (std::size_t bs : {1, 7, 64, 150, 1000}) CHECK(mul_m4rm_blocked(a, b, 6, bs) == plain);

  const BitMatrix odd = random_matrix(101, 80, 10);
  CHECK(mul_m4rm_blocked(odd, random_matrix(80, 90, 11), 5, 13) == mul_cubic(odd, random_matrix(80, 90, 11)));
}

TEST_CASE("mul_m4rm_multitable") {
  const BitMatrix a = random_matrix(128, 128, 12);
  const BitMatrix b = random_matrix(128, 128, 13);
  CHECK(mul_m4rm_multitable(a, b, 5, 1, 32) == mul_m4rm_blocked(a, b, 5, 32));
  CHECK(mul_m4rm_multitable(a, b, 5, 2, 32) == mul_cubic(a, b));

  // t*k = 48 does not divide l = 100: trailing groups use fewer tables.
  const BitMatrix c = random_matrix(77, 100, 14);
  const BitMatrix d = random_matrix(100, 150, 15);
  CHECK(mul_m4rm_multitable(c, d, 6, 8, 20) == mul_cubic(c, d));
}

TEST_CASE("the three variants agree on random shapes and parameters") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t m = uniform(rng, 1, 300);
    const std::size_t l = uniform(rng, 1, 300);
    const std::size_t n = uniform(rng, 1, 300);
    const auto k = static_cast<unsigned>(uniform(rng, 1, 12));
    const auto t = static_cast<unsigned>(uniform(rng, 1, 8));
    const std::size_t bs = uniform(rng, 1, 400);
    const BitMatrix a = random_matrix(m, l, rng());
    const BitMatrix b = random_matrix(l, n, rng());
    const BitMatrix expected = oracle::naive_product(a, b);
    const BitMatrix c1 = mul_m4rm(a, b, k);
    REQUIRE(c1 == expected);
    REQUIRE(trailing_bits_clean(c1));
    REQUIRE(mul_m4rm_blocked(a, b, k, bs) == expected);
    REQUIRE(mul_m4rm_multitable(a, b, k, t, bs) == expected);
  }
}

TEST_CASE("table construction cost and destination-row writes") {
  const std::size_t m = 90, l = 100, n = 70;
  const BitMatrix a = random_matrix(m, l, 1);
  const BitMatrix b = random_matrix(l, n, 2);

  // k = 7: 14 full stripes and a ragged stripe of width 2.
  reset_counters();
  (void)mul_m4rm(a, b, 7);
  CHECK(counters().table_builds == 15);
  CHECK(counters().table_row_additions == 14 * 127 + 3);

  // t = 3, k = 7: groups of 21 columns -> 5 groups; every row written once per group.
  reset_counters();
  (void)mul_m4rm_multitable(a, b, 7, 3, 16);
  const std::size_t groups = (l + 20) / 21;
  const std::size_t blocks = (m + 15) / 16;
  CHECK(counters().m4rm_stripe_groups == groups * blocks);
  CHECK(counters().m4rm_row_writes == m * groups);
  CHECK(counters().table_row_additions == blocks * (14 * 127 + 3));
}

TEST_CASE("addmul_m4rm accumulates into a window") {
  BitMatrix parent = random_matrix(200, 256, 20);
  const BitMatrix before = parent;
  const BitMatrix a = random_matrix(100, 90, 21);
  const BitMatrix b = random_matrix(90, 100, 22);
  addmul_m4rm(parent.window(50, 64, 100, 100), a, b, StripeSpec{5, 4, 33});
  const BitMatrix expected = add(before.window(50, 64, 100, 100), mul_cubic(a, b));
  CHECK(equal(parent.window(50, 64, 100, 100), expected));
  // Columns 164..255 of the touched rows belong to the parent only.
  CHECK(equal(parent.window(50, 192, 100, 64), before.window(50, 192, 100, 64)));
  for (std::size_t r = 50; r < 150; ++r)
    for (std::size_t c = 164; c < 192; ++c) REQUIRE(parent.get(r, c) == before.get(r, c));
}

TEST_CASE("m4rm parameter and shape errors") {
  const BitMatrix a = random_matrix(10, 10, 1);
  CHECK_THROWS_AS(mul_m4rm(a, random_matrix(11, 10, 1), 4), dimension_error);
  CHECK_THROWS_AS(mul_m4rm(a, a, 0), parameter_error);
  CHECK_THROWS_AS(mul_m4rm(a, a, 17), parameter_error);
  CHECK_THROWS_AS(mul_m4rm_multitable(a, a, 4, 9, 10), parameter_error);
  CHECK_THROWS_AS(mul_m4rm_blocked(a, a, 4, 0), parameter_error);
  CHECK(mul_m4rm(BitMatrix(0, 5), random_matrix(5, 5, 1), 3) == BitMatrix(0, 5));
  CHECK(mul_m4rm(BitMatrix(3, 0), BitMatrix(0, 5), 3) == BitMatrix(3, 5));
}
