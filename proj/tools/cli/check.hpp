#pragma once

#include "algorithms.hpp"

#include <gf2/strassen.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gf2::cli {

struct CheckOptions {
  std::vector<Dims> dims;
  std::vector<std::string> algorithms;  // empty: default_check_algorithms
  std::uint64_t seed = 1;
  MulParams params;
  // Test hook: flip one bit of the strassen (or last) product before comparing.
  bool inject_fault = false;
};

// Runs every algorithm on seeded operands and compares each product with
// the bit-level oracle and with mul_cubic. Prints a PASS/FAIL table and the
// first differing coordinate of every failure. Returns 0 when everything
// matches, 1 otherwise.
int run_check(const CheckOptions& options, std::ostream& out);

}  // namespace gf2::cli
