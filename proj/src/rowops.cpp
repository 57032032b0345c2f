#include <gf2/rowops.hpp>

#include <atomic>

#include "fused_kernels.inl"

namespace gf2 {

namespace {
#ifdef GF2MAT_SCALAR_XOR_DEFAULT
std::atomic<bool> g_force_scalar{true};
#else
std::atomic<bool> g_force_scalar{false};
#endif
}  // namespace

void set_force_scalar_xor(bool on) noexcept { g_force_scalar.store(on, std::memory_order_relaxed); }
bool force_scalar_xor() noexcept { return g_force_scalar.load(std::memory_order_relaxed); }

void xor_words(word* dst, const word* src, std::size_t n) noexcept {
  if (force_scalar_xor()) return scalar::xor_words(dst, src, n);
  xor_words_impl(dst, src, n);
}

void xor_words3(word* dst, const word* a, const word* b, std::size_t n) noexcept {
  if (force_scalar_xor()) return scalar::xor_words3(dst, a, b, n);
  xor_words3_impl(dst, a, b, n);
}

void xor_words_fused(word* dst, const word* const* srcs, int t, std::size_t n) noexcept {
  if (force_scalar_xor()) return scalar::xor_words_fused(dst, srcs, t, n);
  fused_impl(dst, srcs, t, n);
}

}  // namespace gf2
