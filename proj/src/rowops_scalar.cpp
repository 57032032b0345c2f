// Built with auto-vectorization disabled (see src/CMakeLists.txt).
#include <gf2/rowops.hpp>

#include "fused_kernels.inl"

namespace gf2::scalar {

void xor_words(word* dst, const word* src, std::size_t n) noexcept { xor_words_impl(dst, src, n); }

void xor_words3(word* dst, const word* a, const word* b, std::size_t n) noexcept { xor_words3_impl(dst, a, b, n); }

void xor_words_fused(word* dst, const word* const* srcs, int t, std::size_t n) noexcept {
  fused_impl(dst, srcs, t, n);
}

}  // namespace gf2::scalar
