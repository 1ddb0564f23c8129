#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "sepform/domains.hpp"
#include "sepform/mpoly.hpp"
#include "sepform/subresultant.hpp"

namespace sepform {

namespace detail {

template <CoefficientRing R>
void require_xy(const MPoly<R>& f) {
  if (!f.vars().subset_of(VarSet{Var::X, Var::Y})) {
    fail(ErrorCode::InvalidArgument, "expected a polynomial in X and Y");
  }
}

/// Substitutes X -> lin in f, where lin is linear in the output variables.
template <CoefficientRing R>
MPoly<R> substitute_x(const MPoly<R>& f, const MPoly<R>& lin, VarSet out_vars) {
  require_xy(f);
  const R& ring = f.ring();
  MPoly<R> out(ring, out_vars);
  const int dx = f.degree(Var::X);
  if (dx < 0) return out;
  // powers[i] = lin^i, built incrementally.
  std::vector<MPoly<R>> powers;
  powers.push_back(MPoly<R>::constant(ring, out_vars, ring.one()));
  for (int i = 1; i <= dx; ++i) powers.push_back(powers.back() * lin);
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [pe, pc] : powers[e[0]].terms()) {
      Exponents g = pe;
      g[static_cast<std::size_t>(Var::Y)] += e[static_cast<std::size_t>(Var::Y)];
      out.add_term(g, ring.mul(c, pc));
    }
  }
  return out;
}

}  // namespace detail

/// F(T - S*Y, Y), expanded, in variables {T, S, Y}.
template <CoefficientRing R>
MPoly<R> shear_expand(const MPoly<R>& f) {
  const R& ring = f.ring();
  const VarSet vars{Var::T, Var::S, Var::Y};
  Exponents sy{};
  sy[static_cast<std::size_t>(Var::S)] = 1;
  sy[static_cast<std::size_t>(Var::Y)] = 1;
  MPoly<R> lin = MPoly<R>::variable(ring, vars, Var::T);
  lin.add_term(sy, ring.neg(ring.one()));
  return detail::substitute_x(f, lin, vars);
}

/// F(V - b*Y, Y) in variables {V, Y}, for V = X or T.
template <CoefficientRing R>
MPoly<R> shear_by(const MPoly<R>& f, const typename R::Elem& b, Var v = Var::X) {
  const R& ring = f.ring();
  const VarSet vars{v, Var::Y};
  MPoly<R> lin = MPoly<R>::variable(ring, vars, v);
  Exponents y{};
  y[static_cast<std::size_t>(Var::Y)] = 1;
  lin.add_term(y, ring.neg(b));
  return detail::substitute_x(f, lin, vars);
}

/// Lc_Y(F(T - S*Y, Y)) as a polynomial in S, read off the top homogeneous
/// component of F.
template <CoefficientRing R>
UPoly<R> shear_leading_coeff(const MPoly<R>& f) {
  detail::require_xy(f);
  const R& ring = f.ring();
  const int d = f.total_degree();
  if (d < 0) return UPoly<R>(ring, {});
  std::vector<typename R::Elem> c(static_cast<std::size_t>(d) + 1, ring.zero());
  for (const auto& [e, v] : f.terms()) {
    if (static_cast<int>(e[0] + e[1]) != d) continue;
    c[e[0]] = e[0] % 2 ? ring.neg(v) : v;
  }
  return UPoly<R>(ring, std::move(c));
}

template <CoefficientRing R>
std::pair<UPoly<R>, UPoly<R>> shear_leading_coeffs(const MPoly<R>& p, const MPoly<R>& q) {
  return {shear_leading_coeff(p), shear_leading_coeff(q)};
}

template <CoefficientRing R>
struct ShearedSystem {
  MPoly<R> p_sheared;
  MPoly<R> q_sheared;
  UPoly<R> lp;
  UPoly<R> lq;
  int d = 0;
  std::size_t tau = 0;
};

/// Max total degree of the pair.
template <CoefficientRing R>
int system_degree(const MPoly<R>& p, const MPoly<R>& q) {
  return std::max(p.total_degree(), q.total_degree());
}

inline ShearedSystem<IntegerRing> shear_system(const IntPoly& p, const IntPoly& q) {
  ShearedSystem<IntegerRing> s{shear_expand(p), shear_expand(q), shear_leading_coeff(p), shear_leading_coeff(q),
                               system_degree(p, q), std::max(bitsize(p), bitsize(q))};
  return s;
}

/// Upper bound on the coefficient bitsize of a sheared polynomial.
inline double sheared_bitsize_bound(int d, double tau) {
  const double dd = std::max(d, 1);
  return tau + dd * std::log2(dd) + std::log2(dd + 1) + 1;
}

namespace detail {

/// Res_Y of two polynomials given in Y over the same domain, either order.
template <CoefficientDomain D>
typename D::Elem resultant_any_order(const D& dom, const YPoly<D>& p, const YPoly<D>& q) {
  if (p.empty() || q.empty()) return dom.zero();
  return resultant(dom, p, q);
}

}  // namespace detail

/// R(T, S) = Res_Y(P(T - S*Y, Y), Q(T - S*Y, Y)), in variables {T, S}.
/// Identically zero iff P and Q share a factor.
template <CoefficientRing R>
MPoly<R> generic_resultant(const MPoly<R>& p, const MPoly<R>& q) {
  const MultivariateDomain<R> dom{p.ring(), VarSet{Var::T, Var::S}};
  const auto ps = to_ypoly(shear_expand(p), Var::Y, dom);
  const auto qs = to_ypoly(shear_expand(q), Var::Y, dom);
  return detail::resultant_any_order(dom, ps, qs);
}

/// R(T, a) = Res_Y(P(T - a*Y, Y), Q(T - a*Y, Y)) as a polynomial in T.
/// Equals R(T, S) at S = a whenever L_P(a) * L_Q(a) != 0.
template <CoefficientRing R>
UPoly<R> specialized_resultant(const MPoly<R>& p, const MPoly<R>& q, const typename R::Elem& a) {
  const UnivariateDomain<R> dom{p.ring(), Var::T};
  const auto ps = to_ypoly(shear_by(p, a, Var::T), Var::Y, dom);
  const auto qs = to_ypoly(shear_by(q, a, Var::T), Var::Y, dom);
  return detail::resultant_any_order(dom, ps, qs);
}

/// Res_Y(P, Q) as a polynomial in X.
template <CoefficientRing R>
UPoly<R> resultant_y(const MPoly<R>& p, const MPoly<R>& q) {
  detail::require_xy(p);
  detail::require_xy(q);
  const UnivariateDomain<R> dom{p.ring(), Var::X};
  return detail::resultant_any_order(dom, to_ypoly(p, Var::Y, dom), to_ypoly(q, Var::Y, dom));
}

}  // namespace sepform
