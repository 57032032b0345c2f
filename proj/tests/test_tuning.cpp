#include <doctest.h>

#include <gf2/tuning.hpp>

#include <sstream>

using namespace gf2;

TEST_CASE("default_params: two cutoff-sized matrices fit in L2") {
  CHECK(2 * 2048 * 2048 / 8 == 1024 * 1024);

  const MulParams opteron = default_params(64 * 1024, 1024 * 1024);
  CHECK(opteron.cutoff == 2048);
  CHECK(opteron.bs == 1024);
  CHECK(opteron.k == 5);
  CHECK(opteron.t == 8);

  const MulParams core2 = default_params(32 * 1024, 4 * 1024 * 1024);
  CHECK(core2.cutoff == 4096);
  CHECK(core2.bs == 2048);
  CHECK(core2.k == 6);
  CHECK(core2.t == 8);

  // Just below 1 MiB the cutoff drops to the next multiple of 64.
  CHECK(default_params(64 * 1024, 1024 * 1024 - 1).cutoff == 2048 - 64);
  CHECK(default_params(32 * 1024, 3 * 1024 * 1024).cutoff == 3520);

  CHECK_THROWS_AS(default_params(0, 1024 * 1024), parameter_error);
  CHECK_THROWS_AS(default_params(1024, 0), parameter_error);
  CHECK_THROWS_AS(default_params(1024, 1000), parameter_error);
}

TEST_CASE("choose_k") {
  CHECK(choose_k(1024, 64 * 1024, 8, 2048) == 5);
  CHECK(8 * (1 << 5) * 2048 / 8 == 64 * 1024);
  CHECK(choose_k(2048, 32 * 1024, 8, 4096) == 6);

  // k0 = 5 needs 64 KiB of tables; with 32 KiB of L1, k = 4 fits exactly.
  CHECK(choose_k(1024, 32 * 1024, 8, 2048) == 4);
  // Neither k0 nor k0 - 1 fits: keep k0.
  CHECK(choose_k(1024, 1024, 8, 2048) == 5);

  CHECK(choose_k(2, 32 * 1024, 8, 64) == 1);
  CHECK(choose_k(std::size_t{1} << 40, 1 << 30, 8, 64) == 16);
  CHECK_THROWS_AS(choose_k(1, 1024, 8, 64), parameter_error);
}

TEST_CASE("choose_k is monotone in the block size") {
  for (std::size_t l1 : {4096u, 32768u, 65536u, 1u << 20})
    for (std::size_t ncols : {64u, 1000u, 2048u, 8192u})
      for (unsigned t : {1u, 2u, 8u}) {
        unsigned prev = 0;
        for (std::size_t bs = 2; bs <= (1u << 20); bs = bs * 5 / 4 + 1) {
          const unsigned k = choose_k(bs, l1, t, ncols);
          REQUIRE(k >= prev);
          prev = k;
        }
      }
}

TEST_CASE("effective_k prefers an explicit k") {
  MulParams p;
  p.k = 7;
  CHECK(effective_k(p, 4096) == 7);
  p.k = 0;
  p.bs = 1024;
  p.l1_bytes = 64 * 1024;
  CHECK(effective_k(p, 2048) == 5);
}

TEST_CASE("config file parsing and resolution") {
  std::istringstream in(
      "# cache geometry\n"
      "l1_bytes = 65536\n"
      "l2_bytes=1048576   # opteron\n"
      "\n"
      "t = 8\n");
  const ParamOverrides o = parse_config(in);
  CHECK(o.l1_bytes == 65536u);
  CHECK(o.l2_bytes == 1048576u);
  CHECK_FALSE(o.cutoff.has_value());
  const MulParams p = resolve_params(o);
  CHECK(p.cutoff == 2048);
  CHECK(p.bs == 1024);
  CHECK(p.k == 5);

  ParamOverrides flags;
  flags.cutoff = 512;
  merge_overrides(flags, o);
  const MulParams q = resolve_params(flags);
  CHECK(q.cutoff == 512);
  CHECK(q.bs == 256);
  CHECK(q.l1_bytes == 65536);

  const MulParams d = resolve_params({});
  CHECK(d.l1_bytes == default_l1_bytes);
  CHECK(d.l2_bytes == default_l2_bytes);
  CHECK(d.cutoff == 2048);

  std::istringstream bad_key("block=3\n");
  CHECK_THROWS_AS(parse_config(bad_key), parameter_error);
  std::istringstream bad_value("k = five\n");
  CHECK_THROWS_AS(parse_config(bad_value), parameter_error);
  std::istringstream no_eq("cutoff 3\n");
  CHECK_THROWS_AS(parse_config(no_eq), parameter_error);

  ParamOverrides invalid;
  invalid.cutoff = 128;
  invalid.bs = 512;
  CHECK_THROWS_AS(resolve_params(invalid), parameter_error);
}
