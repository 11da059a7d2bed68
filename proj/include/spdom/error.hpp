#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spdom {

// Input text that does not match one of the text grammars.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A value or combination of values violating a documented invariant
// (mismatched spaces, interval with a limit lower endpoint, non-partition
// pieces, empty period, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request outside the computable fragment of the model (completion of a
// space other than [0,w], power decomposition over an infinite spectrum).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spdom
