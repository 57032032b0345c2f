#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf2 {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit together.
struct dimension_error : error {
  using error::error;
};

// A window's first column is not on a word border.
struct alignment_error : error {
  using error::error;
};

struct parameter_error : error {
  using error::error;
};

// Malformed matrix file; offset is the byte position where parsing failed.
struct format_error : error {
  format_error(const std::string& what, std::size_t offset)
      : error(what + " (at byte offset " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

}  // namespace gf2
