#pragma once

#include <gf2/strassen.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>

namespace gf2 {

// cutoff: largest multiple of 64 such that two cutoff x cutoff matrices fit
// in L2; bs = cutoff / 2; t = 8; k from choose_k with rows of cutoff columns.
MulParams default_params(std::size_t l1_bytes, std::size_t l2_bytes);

// k0 = floor(0.75 * log2(bs)) - 2, lowered by one when that is what it takes
// for t tables of 2^k rows of ncols columns to fit in L1. Clamped to 1..16.
unsigned choose_k(std::size_t bs, std::size_t l1_bytes, unsigned t, std::size_t ncols);

// params.k if set, otherwise choose_k for tables of ncols columns.
unsigned effective_k(const MulParams& params, std::size_t ncols);

// Keys of the key=value configuration file. Absent keys fall back to the
// derived defaults.
struct ParamOverrides {
  std::optional<std::size_t> l1_bytes;
  std::optional<std::size_t> l2_bytes;
  std::optional<std::size_t> cutoff;
  std::optional<std::size_t> bs;
  std::optional<unsigned> k;
  std::optional<unsigned> t;
};

// Parses "key = value" lines; '#' starts a comment. Throws parameter_error on
// unknown keys or malformed values. Later keys win.
ParamOverrides parse_config(std::istream& in);

// Fills src's keys into dst where dst has none.
void merge_overrides(ParamOverrides& dst, const ParamOverrides& src);

MulParams resolve_params(const ParamOverrides& overrides);

inline constexpr std::size_t default_l1_bytes = 32 * 1024;
inline constexpr std::size_t default_l2_bytes = 1024 * 1024;

}  // namespace gf2
