#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace versor {

// Mathematically invalid request: division by zero, dimension mismatch,
// non-versor input, exceeded enumeration ceiling, and the like.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection of diagram-DSL input. `position` is a byte offset into the text.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

}  // namespace versor
