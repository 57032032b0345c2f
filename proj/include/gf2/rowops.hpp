#pragma once

#include <gf2/bitmatrix.hpp>

#include <cstddef>

namespace gf2 {

// Word-loop kernels behind every row addition. By default the loops are left
// to the compiler's vectorizer (wide registers where available); forcing the
// scalar path routes them through a translation unit built without
// vectorization, one 64-bit word per iteration.
void set_force_scalar_xor(bool on) noexcept;
bool force_scalar_xor() noexcept;

// dst[i] ^= src[i]
void xor_words(word* dst, const word* src, std::size_t n) noexcept;
// dst[i] = a[i] ^ b[i]
void xor_words3(word* dst, const word* a, const word* b, std::size_t n) noexcept;
// dst[i] ^= srcs[0][i] ^ ... ^ srcs[t-1][i], 1 <= t <= 8
void xor_words_fused(word* dst, const word* const* srcs, int t, std::size_t n) noexcept;

namespace scalar {
void xor_words(word* dst, const word* src, std::size_t n) noexcept;
void xor_words3(word* dst, const word* a, const word* b, std::size_t n) noexcept;
void xor_words_fused(word* dst, const word* const* srcs, int t, std::size_t n) noexcept;
}  // namespace scalar

}  // namespace gf2
