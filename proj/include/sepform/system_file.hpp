#pragma once

#include <string>
#include <string_view>

#include "sepform/mpoly.hpp"

namespace sepform {

struct SystemFile {
  IntPoly p;
  IntPoly q;
  std::string source_path;
  int d = 0;            // max total degree
  std::size_t tau = 0;  // max coefficient bitsize
};

/// Parses either
///   P = <expr>
///   Q = <expr>
/// with integer coefficients, X, Y, + - * ^ and parentheses ('#' starts a
/// comment), or JSON {"P": [[ex, ey, "coeff"], ...], "Q": [...]}.
/// Throws ParseError with 1-based line and column.
SystemFile parse_system(std::string_view text, std::string source_path = {});

SystemFile load_system(const std::string& path);

/// Expression form accepted by parse_system.
std::string format_system(const SystemFile& sys);

/// Parses a single expression in X and Y.
IntPoly parse_polynomial(std::string_view expr);

}  // namespace sepform
