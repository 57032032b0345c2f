#include "check.hpp"

#include "bench.hpp"
#include "naive.hpp"

#include <gf2/cubic.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>

namespace gf2::cli {

namespace {

struct Coord {
  std::size_t row, col;
};

std::optional<Coord> first_difference(const BitMatrix& x, const BitMatrix& y) {
  for (std::size_t r = 0; r < x.nrows(); ++r)
    for (std::size_t c = 0; c < x.ncols(); ++c)
      if (x.get(r, c) != y.get(r, c)) return Coord{r, c};
  return std::nullopt;
}

}  // namespace

int run_check(const CheckOptions& options, std::ostream& out) {
  options.params.validate();
  const auto names = options.algorithms.empty() ? default_check_algorithms(options.params) : options.algorithms;
  std::vector<Algorithm> algos;
  for (const auto& n : names) algos.push_back(make_algorithm(n));

  std::vector<std::string> failures;
  out << std::left << std::setw(18) << "dims";
  for (const auto& a : algos) out << ' ' << std::setw(13) << a.name;
  out << '\n';

  for (const Dims& d : options.dims) {
    const auto [a, b] = seeded_operands(d, options.seed);
    const BitMatrix expected = oracle::naive_product(a, b);
    const BitMatrix cubic = mul_cubic(a, b);
    out << std::setw(18) << to_string(d);
    for (std::size_t i = 0; i < algos.size(); ++i) {
      BitMatrix got = algos[i].run(a, b, options.params);
      const bool fault_here = options.inject_fault &&
                              (algos[i].name == "strassen" || (i + 1 == algos.size() && names.end() ==
                                                               std::find(names.begin(), names.end(), "strassen")));
      if (fault_here && !got.empty()) got.flip(got.nrows() / 2, got.ncols() / 2);

      std::string verdict = "PASS";
      if (const auto diff = first_difference(got, expected)) {
        verdict = "FAIL";
        failures.push_back(algos[i].name + " " + to_string(d) + ": first difference from oracle at (" +
                           std::to_string(diff->row) + ", " + std::to_string(diff->col) + ")");
      } else if (!equal(got, cubic)) {
        verdict = "FAIL";
        failures.push_back(algos[i].name + " " + to_string(d) + ": differs from mul_cubic");
      }
      out << ' ' << std::setw(13) << verdict;
    }
    out << '\n';
  }
  for (const auto& f : failures) out << "mismatch: " << f << '\n';
  out << (failures.empty() ? "all products agree\n" : "check FAILED\n");
  return failures.empty() ? 0 : 1;
}

}  // namespace gf2::cli
