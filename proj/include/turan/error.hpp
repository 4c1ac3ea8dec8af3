#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

/// A caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact routine refused an instance above its size guard.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input. The message always carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

inline void guard(bool ok, const std::string& message) {
  if (!ok) throw GuardError(message);
}

}  // namespace detail
}  // namespace turan
