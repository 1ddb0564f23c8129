#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sepform/counting.hpp"
#include "sepform/oracle.hpp"
#include "sepform/shear.hpp"
#include "sepform/solver.hpp"
#include "sepform/triangular.hpp"

namespace sepform::testing {

inline const VarSet kXY{Var::X, Var::Y};

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntPoly int_poly(std::initializer_list<std::tuple<unsigned, unsigned, std::int64_t>> terms) {
  IntPoly f(IntegerRing{}, kXY);
  for (const auto& [ex, ey, c] : terms) f.add_term({ex, ey, 0, 0}, BigInt(c));
  return f;
}

inline ModPoly mod_poly(const PrimeField& k, std::initializer_list<std::tuple<unsigned, unsigned, std::int64_t>> terms) {
  ModPoly f(k, kXY);
  for (const auto& [ex, ey, c] : terms) f.add_term({ex, ey, 0, 0}, k.from_int(c));
  return f;
}

/// Random polynomial in X, Y with total degree <= d, coefficients in [-c, c],
/// each monomial present with probability `density` percent.
inline IntPoly random_int_poly(std::mt19937_64& rng, int d, std::int64_t c, int density = 100) {
  IntPoly f(IntegerRing{}, kXY);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      if (uniform(rng, 1, 100) > density) continue;
      f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0, 0}, BigInt(uniform(rng, -c, c)));
    }
  }
  return f;
}

/// Random Y-polynomial with coefficients that are random polynomials in X.
inline XYPoly<PrimeField> random_xy(std::mt19937_64& rng, const PrimeField& k, int dy, int dx) {
  XYPoly<PrimeField> f;
  for (int j = 0; j <= dy; ++j) {
    std::vector<std::uint64_t> c;
    for (int i = 0; i <= dx; ++i) c.push_back(static_cast<std::uint64_t>(uniform(rng, 0, static_cast<std::int64_t>(k.modulus()) - 1)));
    f.emplace_back(k, std::move(c));
  }
  return f;
}

inline std::uint64_t eval_xy(const PrimeField& k, const ModPoly& f, std::uint64_t x, std::uint64_t y) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : f.terms()) acc = k.add(acc, k.mul(c, k.mul(k.pow(x, e[0]), k.pow(y, e[1]))));
  return acc;
}

inline std::set<std::pair<std::uint64_t, std::uint64_t>> rational_zeros(const PrimeField& k, const ModPoly& p, const ModPoly& q) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t x = 0; x < k.modulus(); ++x) {
    for (std::uint64_t y = 0; y < k.modulus(); ++y) {
      if (eval_xy(k, p, x, y) == 0 && eval_xy(k, q, x, y) == 0) out.insert({x, y});
    }
  }
  return out;
}

/// f(alpha, Y).
inline UPoly<PrimeField> fiber(const PrimeField& k, const XYPoly<PrimeField>& f, std::uint64_t alpha) {
  std::vector<std::uint64_t> c;
  for (const auto& x : f) c.push_back(x.eval(alpha));
  return UPoly<PrimeField>(k, std::move(c));
}

/// Points of F_mu^2 on P = Q = 0 with A(x) = 0 (A == 0: no restriction).
using PointSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

inline PointSet zeros(const PrimeField& k, const XYPoly<PrimeField>& p, const XYPoly<PrimeField>& q, const UPoly<PrimeField>& a) {
  PointSet out;
  for (std::uint64_t x = 0; x < k.modulus(); ++x) {
    if (!a.is_zero() && a.eval(x) != 0) continue;
    const UPoly<PrimeField> px = fiber(k, p, x);
    const UPoly<PrimeField> qx = fiber(k, q, x);
    for (std::uint64_t y = 0; y < k.modulus(); ++y) {
      if (px.eval(y) == 0 && qx.eval(y) == 0) out.insert({x, y});
    }
  }
  return out;
}

/// Random squarefree polynomial of degree <= 3, or zero.
inline UPoly<PrimeField> random_restriction(std::mt19937_64& rng, const PrimeField& k) {
  if (rng() % 3 == 0) return UPoly<PrimeField>(k, {});
  UPoly<PrimeField> a = UPoly<PrimeField>::constant(k, 1);
  std::set<std::uint64_t> roots;
  const int n = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) roots.insert(rng() % k.modulus());
  for (auto r : roots) a = a * UPoly<PrimeField>(k, {k.neg(r), 1});
  return a;
}

struct TriangularCase {
  XYPoly<PrimeField> p;
  XYPoly<PrimeField> q;
  UPoly<PrimeField> a;
};

/// Random input for the triangular decomposition with deg_Y Q <= deg_Y P.
/// Sometimes plants a common root or an X-only factor in Q.
inline std::optional<TriangularCase> random_triangular_case(std::mt19937_64& rng, const PrimeField& k) {
  using FPoly = UPoly<PrimeField>;
  const UnivariateDomain<PrimeField> dom{k, Var::X};
  const int py = 1 + static_cast<int>(rng() % 3);
  const int qy = 1 + static_cast<int>(rng() % py);
  XYPoly<PrimeField> p = random_xy(rng, k, py, 2);
  XYPoly<PrimeField> q = random_xy(rng, k, qy, 2);
  if (rng() % 2) p.back() = FPoly::constant(k, 1);
  if (rng() % 2) {
    const std::uint64_t x0 = rng() % k.modulus(), y0 = rng() % k.modulus();
    p[0] = p[0] - FPoly::constant(k, fiber(k, p, x0).eval(y0));
    q[0] = q[0] - FPoly::constant(k, fiber(k, q, x0).eval(y0));
  }
  if (rng() % 4 == 0) {
    const FPoly lin(k, {rng() % k.modulus(), 1});
    for (auto& c : q) c = c * lin;
  }
  ytrim(dom, p);
  ytrim(dom, q);
  if (p.empty() || q.empty() || ydegree<UnivariateDomain<PrimeField>>(p) < ydegree<UnivariateDomain<PrimeField>>(q)) return std::nullopt;
  return TriangularCase{p, q, random_restriction(rng, k)};
}

/// Checks a decomposition against exhaustive enumeration of F_mu^2. Empty
/// result means no violation.
inline std::vector<std::string> triangular_violations(const PrimeField& k, const TriangularCase& c,
                                                      const std::vector<TriangularPair<PrimeField>>& out) {
  using FPoly = UPoly<PrimeField>;
  std::vector<std::string> bad;
  PointSet got;
  FPoly prod = FPoly::constant(k, 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& comp = out[i];
    const std::string tag = "component " + std::to_string(i) + ": ";
    if (comp.a.degree() <= 0) bad.push_back(tag + "constant A");
    if (comp.a != make_monic(comp.a)) bad.push_back(tag + "A not monic");
    if (gcd_monic(comp.a, comp.b.back()).degree() != 0) bad.push_back(tag + "A and Lc(B) not coprime");
    if (!c.a.is_zero() && !rem(c.a, comp.a).is_zero()) bad.push_back(tag + "A does not divide the restriction");
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (gcd_monic(comp.a, out[j].a).degree() != 0) bad.push_back(tag + "shares a root with component " + std::to_string(j));
    }
    prod = prod * comp.a;
    for (std::uint64_t x = 0; x < k.modulus(); ++x) {
      if (comp.a.eval(x) != 0) continue;
      const FPoly bx = fiber(k, comp.b, x);
      const FPoly g = gcd_monic(fiber(k, c.p, x), fiber(k, c.q, x));
      if (bx.degree() != comp.index || g.degree() != comp.index || make_monic(bx) != g) {
        bad.push_back(tag + "fiber at x=" + std::to_string(x) + " is not the gcd of degree " + std::to_string(comp.index));
      }
      for (std::uint64_t y = 0; y < k.modulus(); ++y) {
        if (bx.eval(y) == 0 && !got.insert({x, y}).second) bad.push_back(tag + "overlaps at x=" + std::to_string(x));
      }
    }
  }
  if (squarefree_part(prod) != prod) bad.push_back("product of the A_i is not squarefree");
  if (got != zeros(k, c.p, c.q, c.a)) bad.push_back("union of components differs from the zero set");
  return bad;
}

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

/// Random arrangement: k_p lines for P and k_q for Q, max(k_p, k_q) = d, lines
/// drawn through a small grid so that many of them are concurrent. P and Q
/// never share a slope. Regenerated until the coefficient bitsize is <= tau.
inline ArrangementSystem random_arrangement(std::mt19937_64& rng, int d, std::size_t tau_max = 16) {
  const std::vector<Rational> pool{rat(-2), rat(-1), rat(0), rat(1), rat(2), rat(1, 2), rat(-1, 2), rat(3), rat(-3), rat(1, 3)};
  for (;;) {
    std::vector<Rational> slopes = pool;
    std::shuffle(slopes.begin(), slopes.end(), rng);
    const auto split = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(slopes.size()) - 1));
    const std::vector<Rational> sp(slopes.begin(), slopes.begin() + static_cast<std::ptrdiff_t>(split));
    const std::vector<Rational> sq(slopes.begin() + static_cast<std::ptrdiff_t>(split), slopes.end());
    int kp = d;
    int kq = d;
    if (uniform(rng, 0, 1)) {
      kp = static_cast<int>(uniform(rng, 1, d));
    } else {
      kq = static_cast<int>(uniform(rng, 1, d));
    }
    auto draw = [&](const std::vector<Rational>& ss, int k) {
      std::vector<Line> lines;
      for (int i = 0; i < k; ++i) {
        const Rational s = ss[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ss.size()) - 1))];
        const Rational x0 = rat(uniform(rng, -1, 1));
        const Rational y0 = rat(uniform(rng, -1, 1));
        lines.push_back({s, y0 - s * x0});
      }
      return lines;
    };
    LineArrangement arr{draw(sp, kp), draw(sq, kq)};
    auto sys = line_arrangement_system(arr);
    if (std::max(bitsize(sys.p), bitsize(sys.q)) <= tau_max) return sys;
  }
}

}  // namespace sepform::testing
