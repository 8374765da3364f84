#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace telescope {

// Syntax or semantic error in one of the text grammars. position() is the
// 0-based byte offset into the input; what() carries "column N: ...".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Evaluation outside the domain (negative factorial, division by zero,
// Gamma pole in a numerator, parity violation).
class EvalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace telescope
