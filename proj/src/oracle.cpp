#include "sepform/oracle.hpp"

#include <algorithm>

#include "sepform/shear.hpp"
#include "sepform/solver.hpp"

namespace sepform {

namespace {

IntPoly line_poly(const Line& l) {
  const IntegerRing zz;
  const BigInt g = gcd(l.slope.den(), l.intercept.den());
  const BigInt lcm = div_exact(l.slope.den() * l.intercept.den(), g);
  const VarSet xy{Var::X, Var::Y};
  IntPoly f(zz, xy);
  f.add_term({0, 1, 0, 0}, lcm);
  f.add_term({1, 0, 0, 0}, -div_exact(lcm, l.slope.den()) * l.slope.num());
  f.add_term({0, 0, 0, 0}, -div_exact(lcm, l.intercept.den()) * l.intercept.num());
  return f;
}

IntPoly product(const std::vector<Line>& lines) {
  IntPoly f = IntPoly::constant(IntegerRing{}, VarSet{Var::X, Var::Y}, BigInt(1));
  for (const auto& l : lines) f = f * line_poly(l);
  return f;
}

}  // namespace

ArrangementSystem line_arrangement_system(const LineArrangement& arr) {
  if (arr.lines_p.empty() || arr.lines_q.empty()) fail(ErrorCode::InvalidArgument, "each side needs at least one line");
  ArrangementSystem out{product(arr.lines_p), product(arr.lines_q), {}};
  for (const auto& lp : arr.lines_p) {
    for (const auto& lq : arr.lines_q) {
      if (lp.slope == lq.slope) fail(ErrorCode::InvalidArgument, "parallel lines across P and Q");
      const Rational x = (lq.intercept - lp.intercept) / (lp.slope - lq.slope);
      out.points.push_back({x, lp.slope * x + lp.intercept});
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

bool is_separating(std::span<const RationalPoint> points, const BigInt& a) {
  std::vector<Rational> values;
  values.reserve(points.size());
  const Rational ar(a);
  for (const auto& pt : points) values.push_back(pt.x + ar * pt.y);
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

ClassicalResult classical_separating_form(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::NotCoprime, "a zero polynomial shares every factor");
  const auto lp = shear_leading_coeff(p);
  const auto lq = shear_leading_coeff(q);
  const int d = system_degree(p, q);
  const std::uint64_t limit = small_prime_limit(d);
  // Bezout: no a can exceed this, so reaching it ends the scan.
  const auto cap = static_cast<std::size_t>(std::max(p.total_degree(), 0) * std::max(q.total_degree(), 0));
  ClassicalResult best;
  bool found = false;
  for (std::uint64_t a = 0; a <= limit; ++a) {
    const BigInt av(static_cast<std::int64_t>(a));
    if (lp.eval(av).is_zero() || lq.eval(av).is_zero()) continue;
    const int deg = rational_sqfree_degree(p, q, av);
    if (deg < 0) fail(ErrorCode::NotCoprime, "resultant vanishes identically: P and Q share a factor");
    if (!found || static_cast<std::size_t>(deg) > best.count) {
      best = {a, static_cast<std::size_t>(deg)};
      found = true;
      if (best.count >= cap) break;
    }
  }
  return best;
}

}  // namespace sepform
