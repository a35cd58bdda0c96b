#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlat {

enum class ErrorKind {
  PaletteMismatch,
  SelfLoopPresent,
  DanglingEndpoint,
  InvalidMultiplicity,
  IndexOutOfRange,
  IncomparableAtoms,
  NegativeBetti,
  SyntaxError,
  UnknownAtom,
  UnsupportedShape,
  LawViolation,
  InvalidChain,
  MalformedComplex,
  Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module of the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mlat
