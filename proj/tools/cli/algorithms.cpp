#include "algorithms.hpp"

#include <gf2/cubic.hpp>
#include <gf2/errors.hpp>
#include <gf2/m4rm.hpp>
#include <gf2/tuning.hpp>

#include <charconv>

namespace gf2::cli {

namespace {

std::size_t parse_size(const std::string& s, const std::string& whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw parameter_error("bad dimensions: " + whole);
  return v;
}

MulParams with(const MulParams& p, std::size_t n, unsigned t, bool blocked) {
  MulParams q = p;
  q.t = t;
  q.k = effective_k(p, n);
  if (!blocked) q.bs = 0;
  return q;
}

}  // namespace

Algorithm make_algorithm(const std::string& name) {
  if (name == "cubic") {
    return {name, [](ConstWindow a, ConstWindow b, const MulParams&) { return mul_cubic(a, b); },
            [](const MulParams& p, std::size_t) {
              MulParams q = p;
              q.k = 0;
              q.t = 0;
              q.bs = 0;
              return q;
            }};
  }
  if (name == "m4rm") {
    return {name,
            [](ConstWindow a, ConstWindow b, const MulParams& p) {
              return mul_m4rm(a, b, effective_k(p, b.ncols()));
            },
            [](const MulParams& p, std::size_t n) { return with(p, n, 1, false); }};
  }
  if (name == "m4rm-blocked") {
    return {name,
            [](ConstWindow a, ConstWindow b, const MulParams& p) {
              return mul_m4rm_blocked(a, b, effective_k(p, b.ncols()), p.bs);
            },
            [](const MulParams& p, std::size_t n) { return with(p, n, 1, true); }};
  }
  if (name.rfind("m4rm-t", 0) == 0 && name.size() == 7 && name[6] >= '1' && name[6] <= '8') {
    const unsigned t = static_cast<unsigned>(name[6] - '0');
    return {name,
            [t](ConstWindow a, ConstWindow b, const MulParams& p) {
              return mul_m4rm_multitable(a, b, effective_k(p, b.ncols()), t, p.bs);
            },
            [t](const MulParams& p, std::size_t n) { return with(p, n, t, true); }};
  }
  if (name == "strassen" || name == "auto") {
    return {name, [](ConstWindow a, ConstWindow b, const MulParams& p) { return mul_strassen(a, b, p); },
            [](const MulParams& p, std::size_t n) {
              MulParams q = p;
              q.k = effective_k(p, std::min(n, p.cutoff));
              return q;
            }};
  }
  throw parameter_error("unknown algorithm '" + name + "'");
}

std::vector<std::string> default_check_algorithms(const MulParams& params) {
  return {"cubic", "m4rm", "m4rm-blocked", "m4rm-t" + std::to_string(params.t), "strassen", "auto"};
}

Dims parse_dims(const std::string& text) {
  const auto x1 = text.find('x');
  if (x1 == std::string::npos) {
    const std::size_t v = parse_size(text, text);
    return {v, v, v};
  }
  const auto x2 = text.find('x', x1 + 1);
  if (x2 == std::string::npos) throw parameter_error("bad dimensions: " + text + " (expected MxLxN)");
  return {parse_size(text.substr(0, x1), text), parse_size(text.substr(x1 + 1, x2 - x1 - 1), text),
          parse_size(text.substr(x2 + 1), text)};
}

std::string to_string(const Dims& d) {
  return std::to_string(d.m) + "x" + std::to_string(d.l) + "x" + std::to_string(d.n);
}

}  // namespace gf2::cli
