#pragma once

#include <gf2/bitmatrix.hpp>

#include <array>
#include <span>

namespace gf2 {

// Parity of the XOR of all words.
bool parity_accumulate(std::span<const word> words) noexcept;

// Parity of 64 words at once: bit i (counting from the least significant
// bit) of the result is the parity of words[i].
word parity64(const std::array<word, 64>& words) noexcept;

// Classical product using dot products of rows of a with rows of transpose(b).
BitMatrix mul_cubic(ConstWindow a, ConstWindow b);

}  // namespace gf2
