#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "sepform/bigint.hpp"
#include "sepform/mpoly.hpp"

namespace sepform {

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// The line Y = slope * X + intercept.
struct Line {
  Rational slope;
  Rational intercept;
};

struct LineArrangement {
  std::vector<Line> lines_p;
  std::vector<Line> lines_q;
};

struct ArrangementSystem {
  IntPoly p;
  IntPoly q;
  /// Sorted, without duplicates.
  std::vector<RationalPoint> points;
};

/// P and Q as products of the (denominator-cleared) line equations, and the
/// exact intersection set. Rejects a P-line parallel to a Q-line.
ArrangementSystem line_arrangement_system(const LineArrangement& arr);

/// True iff x + a*y takes pairwise distinct values on the points.
bool is_separating(std::span<const RationalPoint> points, const BigInt& a);

struct ClassicalResult {
  std::uint64_t a = 0;
  std::size_t count = 0;
};

/// Scans a = 0..2d^4 over Z: the smallest a with L_P(a) L_Q(a) != 0 that
/// maximizes deg of the squarefree part of R(T, a). The maximum is #V.
ClassicalResult classical_separating_form(const IntPoly& p, const IntPoly& q);

}  // namespace sepform
