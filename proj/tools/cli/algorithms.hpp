#pragma once

#include <gf2/bitmatrix.hpp>
#include <gf2/strassen.hpp>

#include <functional>
#include <string>
#include <vector>

namespace gf2::cli {

// A named multiplication routine as selected by --algo.
struct Algorithm {
  std::string name;
  std::function<BitMatrix(ConstWindow, ConstWindow, const MulParams&)> run;
  // Parameters this routine actually uses for a product with n columns.
  std::function<MulParams(const MulParams&, std::size_t)> effective;
};

// cubic, m4rm, m4rm-blocked, m4rm-t<1..8>, strassen, auto.
// Throws parameter_error on an unknown name.
Algorithm make_algorithm(const std::string& name);

// The set `check` runs when no --algo is given, with t taken from params.
std::vector<std::string> default_check_algorithms(const MulParams& params);

struct Dims {
  std::size_t m = 0;
  std::size_t l = 0;
  std::size_t n = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

// "MxLxN", or a single "N" for N x N x N.
Dims parse_dims(const std::string& text);
std::string to_string(const Dims& d);

}  // namespace gf2::cli
