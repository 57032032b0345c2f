// Shared body of the row-addition kernels. Included by the wide and the
// scalar translation units, which differ only in compile flags.

namespace {

template <int T>
void fused(gf2::word* __restrict dst, const gf2::word* const* srcs, std::size_t n) noexcept {
  const gf2::word* __restrict s0 = srcs[0];
  const gf2::word* __restrict s1 = T > 1 ? srcs[1] : nullptr;
  const gf2::word* __restrict s2 = T > 2 ? srcs[2] : nullptr;
  const gf2::word* __restrict s3 = T > 3 ? srcs[3] : nullptr;
  const gf2::word* __restrict s4 = T > 4 ? srcs[4] : nullptr;
  const gf2::word* __restrict s5 = T > 5 ? srcs[5] : nullptr;
  const gf2::word* __restrict s6 = T > 6 ? srcs[6] : nullptr;
  const gf2::word* __restrict s7 = T > 7 ? srcs[7] : nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    gf2::word x = s0[i];
    if constexpr (T > 1) x ^= s1[i];
    if constexpr (T > 2) x ^= s2[i];
    if constexpr (T > 3) x ^= s3[i];
    if constexpr (T > 4) x ^= s4[i];
    if constexpr (T > 5) x ^= s5[i];
    if constexpr (T > 6) x ^= s6[i];
    if constexpr (T > 7) x ^= s7[i];
    dst[i] ^= x;
  }
}

void xor_words_impl(gf2::word* __restrict dst, const gf2::word* __restrict src, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void xor_words3_impl(gf2::word* dst, const gf2::word* a, const gf2::word* b, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void fused_impl(gf2::word* dst, const gf2::word* const* srcs, int t, std::size_t n) noexcept {
  switch (t) {
    case 1: fused<1>(dst, srcs, n); break;
    case 2: fused<2>(dst, srcs, n); break;
    case 3: fused<3>(dst, srcs, n); break;
    case 4: fused<4>(dst, srcs, n); break;
    case 5: fused<5>(dst, srcs, n); break;
    case 6: fused<6>(dst, srcs, n); break;
    case 7: fused<7>(dst, srcs, n); break;
    default: fused<8>(dst, srcs, n); break;
  }
}

}  // namespace
