#pragma once

#include <gf2/bitmatrix.hpp>

namespace gf2::oracle {

// Bit-by-bit triple loop over unpacked entries. Shares no code with the
// packed multiplication routines; used only to check them.
BitMatrix naive_product(ConstWindow a, ConstWindow b);

}  // namespace gf2::oracle
