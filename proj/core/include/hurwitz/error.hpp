#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hurwitz {

/// Malformed text input. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration grew past its configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input lies outside the exhaustive oracle's search bounds.
class BoundsExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive search ran out of budget without meeting its goal.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hurwitz
