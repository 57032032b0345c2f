#include "bench.hpp"

#include "naive.hpp"

#include <gf2/cubic.hpp>
#include <gf2/errors.hpp>
#include <gf2/m4rm.hpp>
#include <gf2/stats.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace gf2::cli {

namespace {

// Shortest scientific form (at least 9 significant digits) that reads back
// to the same double.
std::string format_seconds(double v) {
  char buf[64];
  for (int precision = 8; precision <= 17; ++precision) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, precision);
    double back = 0;
    std::from_chars(buf, res.ptr, back);
    if (back == v || precision == 17) return std::string(buf, res.ptr);
  }
  return {};
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class T>
T field_as(const std::string& s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw parameter_error("csv line " + std::to_string(line) + ": bad field '" + s + "'");
  return v;
}

// Cross-check route for --verify: the bit-level oracle while it stays cheap,
// otherwise a different packed algorithm than the one under test.
BitMatrix reference_product(const std::string& algorithm, const BitMatrix& a, const BitMatrix& b) {
  const double work = static_cast<double>(a.nrows()) * static_cast<double>(a.ncols()) * static_cast<double>(b.ncols());
  if (work <= 1e9) return oracle::naive_product(a, b);
  if (algorithm == "cubic") return mul_m4rm(a, b, 8);
  return mul_cubic(a, b);
}

}  // namespace

std::pair<BitMatrix, BitMatrix> seeded_operands(const Dims& d, std::uint64_t seed) {
  return {random_matrix(d.m, d.l, seed), random_matrix(d.l, d.n, seed ^ 0xA5A5A5A5A5A5A5A5ull)};
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << csv_header << '\n';
  for (const auto& r : records) {
    out << r.algorithm << ',' << r.m << ',' << r.l << ',' << r.n << ',' << r.k << ',' << r.t << ',' << r.bs << ','
        << r.cutoff << ',' << r.reps << ',' << format_seconds(r.wall_s) << ',' << format_seconds(r.mean_s) << ','
        << format_seconds(r.min_s) << ',' << r.peak_bytes << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header) throw parameter_error("csv: unexpected header");
  std::vector<BenchRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 13) throw parameter_error("csv line " + std::to_string(lineno) + ": expected 13 fields");
    BenchRecord r;
    r.algorithm = f[0];
    r.m = field_as<std::size_t>(f[1], lineno);
    r.l = field_as<std::size_t>(f[2], lineno);
    r.n = field_as<std::size_t>(f[3], lineno);
    r.k = field_as<unsigned>(f[4], lineno);
    r.t = field_as<unsigned>(f[5], lineno);
    r.bs = field_as<std::size_t>(f[6], lineno);
    r.cutoff = field_as<std::size_t>(f[7], lineno);
    r.reps = field_as<std::size_t>(f[8], lineno);
    r.wall_s = field_as<double>(f[9], lineno);
    r.mean_s = field_as<double>(f[10], lineno);
    r.min_s = field_as<double>(f[11], lineno);
    r.peak_bytes = field_as<std::size_t>(f[12], lineno);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options, std::ostream* log) {
  if (options.reps < 1) throw parameter_error("reps must be at least 1");
  options.params.validate();
  std::vector<Algorithm> algos;
  for (const auto& name : options.algorithms) algos.push_back(make_algorithm(name));

  std::vector<BenchRecord> records;
  for (const Dims& d : options.dims) {
    const auto [a, b] = seeded_operands(d, options.seed);
    for (const auto& algo : algos) {
      (void)algo.run(a, b, options.params);  // warm-up

      BenchRecord rec;
      const MulParams used = algo.effective(options.params, d.n);
      rec.algorithm = algo.name;
      rec.m = d.m;
      rec.l = d.l;
      rec.n = d.n;
      rec.k = used.k;
      rec.t = used.t;
      rec.bs = used.bs;
      rec.cutoff = (algo.name == "strassen" || algo.name == "auto") ? used.cutoff : 0;
      rec.reps = options.reps;
      rec.min_s = 1e300;

      BitMatrix last;
      for (std::size_t rep = 0; rep < options.reps; ++rep) {
        last = BitMatrix();
        reset_peak_memory();
        const auto t0 = std::chrono::steady_clock::now();
        last = algo.run(a, b, options.params);
        const auto t1 = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(t1 - t0).count();
        rec.wall_s += s;
        rec.min_s = std::min(rec.min_s, s);
        rec.peak_bytes = std::max(rec.peak_bytes, memory_stats().peak_bytes);
      }
      rec.mean_s = rec.wall_s / static_cast<double>(rec.reps);
      rec.min_s = std::min(rec.min_s, rec.mean_s);

      if (options.verify && !equal(last, reference_product(algo.name, a, b)))
        throw error("verification failed: " + algo.name + " at " + to_string(d));
      if (log) *log << algo.name << ' ' << to_string(d) << " mean " << rec.mean_s << " s, min " << rec.min_s << " s\n";
      records.push_back(rec);
    }
  }
  return records;
}

}  // namespace gf2::cli
