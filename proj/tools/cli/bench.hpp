#pragma once

#include "algorithms.hpp"

#include <gf2/strassen.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gf2::cli {

// One benchmark row: mean and minimum over `reps` timed runs after one
// untimed warm-up. wall_s is the total of the timed runs. peak_bytes is the
// largest live matrix storage observed during a run, inputs included.
struct BenchRecord {
  std::string algorithm;
  std::size_t m = 0, l = 0, n = 0;
  unsigned k = 0, t = 0;
  std::size_t bs = 0, cutoff = 0;
  std::size_t reps = 1;
  double wall_s = 0, mean_s = 0, min_s = 0;
  std::size_t peak_bytes = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr const char* csv_header =
    "algorithm,m,l,n,k,t,bs,cutoff,reps,wall_s,mean_s,min_s,peak_bytes";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);
// Throws parameter_error on a wrong header or malformed row.
std::vector<BenchRecord> read_csv(std::istream& in);

struct BenchOptions {
  std::vector<Dims> dims;
  std::vector<std::string> algorithms;
  std::size_t reps = 10;
  std::uint64_t seed = 1;
  MulParams params;
  bool verify = false;
};

// Runs every (dims, algorithm) pair. With verify set, the last product is
// compared against an independent route and a mismatch throws gf2::error.
std::vector<BenchRecord> run_bench(const BenchOptions& options, std::ostream* log = nullptr);

// Same seeded operands that check and bench use for a given dims triple.
std::pair<BitMatrix, BitMatrix> seeded_operands(const Dims& d, std::uint64_t seed);

}  // namespace gf2::cli
