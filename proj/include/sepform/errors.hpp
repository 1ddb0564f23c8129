#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepform {

enum class ErrorCode {
  InvalidArgument,
  Overflow,
  InexactDivision,
  NotInvertible,
  Inseparable,
  LeadingCoefficientsNotCoprime,
  NotCoprime,
  NotZeroDimensional,
  SizeLimit,
  Parse,
  BoundExceeded,
};

/// Stable machine-readable name, used in structured CLI output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorCode::Parse, format(line, column, msg)), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& msg) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sepform
