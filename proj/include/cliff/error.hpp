#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  SignatureMismatch,
  DimensionCap,
  DimensionMismatch,
  NotInvertible,
  NotAVector,
  NotStable,
  NotInGroup,
  DegenerateForm,
  NotAnIsometry,
  IsotropicVector,
  ZeroVector,
  NotIdempotent,
  NotSimple,
  NoSolution,
  SearchFailed,
  UnexpectedDimension,
  Internal,
};

const char *to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Raised by the expression parser; `position` is a byte offset into the input.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &what)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

} // namespace cliff
