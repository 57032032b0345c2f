#include <gf2/tuning.hpp>

#include <gf2/errors.hpp>
#include <gf2/graycode.hpp>
#include <gf2/m4rm.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>

namespace gf2 {

namespace {

std::size_t table_bytes(unsigned t, int k, std::size_t ncols) {
  return std::size_t{t} * (std::size_t{1} << k) * words_for(ncols) * sizeof(word);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value, std::size_t line) {
  T out{};
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw parameter_error("config line " + std::to_string(line) + ": bad value for " + key + ": '" + value + "'");
  return out;
}

}  // namespace

unsigned choose_k(std::size_t bs, std::size_t l1_bytes, unsigned t, std::size_t ncols) {
  if (bs < 2) throw parameter_error("choose_k: block size must be at least 2");
  const int k0 = static_cast<int>(std::floor(0.75 * std::log2(static_cast<double>(bs)))) - 2;
  int k = k0;
  if (k0 >= 2 && table_bytes(t, k0, ncols) > l1_bytes && table_bytes(t, k0 - 1, ncols) <= l1_bytes) k = k0 - 1;
  return static_cast<unsigned>(std::clamp(k, 1, static_cast<int>(max_gray_bits)));
}

unsigned effective_k(const MulParams& params, std::size_t ncols) {
  if (params.k != 0) return params.k;
  return choose_k(std::max<std::size_t>(params.bs, 2), params.l1_bytes, params.t, ncols);
}

MulParams default_params(std::size_t l1_bytes, std::size_t l2_bytes) {
  if (l1_bytes == 0 || l2_bytes == 0) throw parameter_error("cache sizes must be positive");
  // 2 * c^2 / 8 <= l2  <=>  c^2 <= 4 * l2
  auto cutoff = static_cast<std::size_t>(std::sqrt(4.0 * static_cast<double>(l2_bytes)));
  while (cutoff * cutoff > 4 * l2_bytes) --cutoff;
  while ((cutoff + 1) * (cutoff + 1) <= 4 * l2_bytes) ++cutoff;
  cutoff -= cutoff % word_bits;
  if (cutoff < word_bits) throw parameter_error("L2 size too small to hold two 64x64 matrices");

  MulParams p;
  p.l1_bytes = l1_bytes;
  p.l2_bytes = l2_bytes;
  p.cutoff = cutoff;
  p.bs = cutoff / 2;
  p.t = max_tables;
  p.k = choose_k(p.bs, l1_bytes, p.t, cutoff);
  return p;
}

ParamOverrides parse_config(std::istream& in) {
  ParamOverrides o;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw parameter_error("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "l1_bytes") o.l1_bytes = parse_number<std::size_t>(key, value, lineno);
    else if (key == "l2_bytes") o.l2_bytes = parse_number<std::size_t>(key, value, lineno);
    else if (key == "cutoff") o.cutoff = parse_number<std::size_t>(key, value, lineno);
    else if (key == "bs") o.bs = parse_number<std::size_t>(key, value, lineno);
    else if (key == "k") o.k = parse_number<unsigned>(key, value, lineno);
    else if (key == "t") o.t = parse_number<unsigned>(key, value, lineno);
    else throw parameter_error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return o;
}

void merge_overrides(ParamOverrides& dst, const ParamOverrides& src) {
  if (!dst.l1_bytes) dst.l1_bytes = src.l1_bytes;
  if (!dst.l2_bytes) dst.l2_bytes = src.l2_bytes;
  if (!dst.cutoff) dst.cutoff = src.cutoff;
  if (!dst.bs) dst.bs = src.bs;
  if (!dst.k) dst.k = src.k;
  if (!dst.t) dst.t = src.t;
}

MulParams resolve_params(const ParamOverrides& o) {
  MulParams p = default_params(o.l1_bytes.value_or(default_l1_bytes), o.l2_bytes.value_or(default_l2_bytes));
  if (o.cutoff) p.cutoff = *o.cutoff;
  p.bs = o.bs.value_or(p.cutoff / 2);
  p.t = o.t.value_or(p.t);
  p.k = o.k ? *o.k : choose_k(std::max<std::size_t>(p.bs, 2), p.l1_bytes, p.t, p.cutoff);
  p.validate();
  return p;
}

}  // namespace gf2
