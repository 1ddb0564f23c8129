#pragma once

#include <vector>

#include "sepform/domains.hpp"
#include "sepform/mpoly.hpp"
#include "sepform/subresultant.hpp"

namespace sepform {

template <Field K>
using XYPoly = YPoly<UnivariateDomain<K>>;

/// One component {A(X) = 0, B(X, Y) = 0}; B has Y-degree `index` above every
/// root of A.
template <Field K>
struct TriangularPair {
  int index = 0;
  UPoly<K> a;
  XYPoly<K> b;
};

/// Each Y-coefficient of b reduced modulo a.
template <Field K>
XYPoly<K> reduce_bivar_mod_univar(const UnivariateDomain<K>& dom, const XYPoly<K>& b, const UPoly<K>& a) {
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "reduction modulo the zero polynomial");
  XYPoly<K> out;
  out.reserve(b.size());
  for (const auto& c : b) out.push_back(rem(c, a));
  ytrim(dom, out);
  return out;
}

inline ModPoly reduce_bivar_mod_univar(const ModPoly& b, const UPoly<PrimeField>& a) {
  const UnivariateDomain<PrimeField> dom{b.ring(), Var::X};
  return from_ypoly(reduce_bivar_mod_univar(dom, to_ypoly(b, Var::Y, dom), a), Var::Y, dom);
}

inline UPoly<PrimeField> invert_mod_univar(const UPoly<PrimeField>& c, const UPoly<PrimeField>& a) {
  return invert_mod(c, a);
}

/// Subresultant triangular decomposition of V(P, Q, A) over K. A == 0 means
/// no restriction. Requires deg_Y Q <= deg_Y P and coprime leading
/// coefficients in Y. All A_i are monic.
template <Field K>
std::vector<TriangularPair<K>> triangular_decompose(const UnivariateDomain<K>& dom, const XYPoly<K>& p, const XYPoly<K>& q,
                                                    const UPoly<K>& a) {
  if (p.empty() || q.empty()) fail(ErrorCode::InvalidArgument, "triangular decomposition of a zero polynomial");
  if (ydegree<UnivariateDomain<K>>(q) > ydegree<UnivariateDomain<K>>(p)) {
    fail(ErrorCode::InvalidArgument, "triangular decomposition needs deg_Y(Q) <= deg_Y(P)");
  }
  if (gcd_monic(p.back(), q.back()).degree() > 0) {
    fail(ErrorCode::LeadingCoefficientsNotCoprime, "leading coefficients in Y are not coprime");
  }
  const int pdeg = ydegree<UnivariateDomain<K>>(p);
  const int qdeg = ydegree<UnivariateDomain<K>>(q);
  std::vector<TriangularPair<K>> out;

  // Q free of Y: every fiber over a root of Q(X) is the whole of P(alpha, Y).
  if (qdeg == 0) {
    UPoly<K> g = a.is_zero() ? squarefree_part(q[0]) : gcd_monic(q[0], a);
    if (g.degree() > 0 && pdeg > 0) out.push_back({pdeg, g, p});
    return out;
  }

  const auto seq = subresultant_sequence(dom, p, q);
  const UPoly<K>& res = ycoeff(dom, seq.resultant(), 0);
  if (res.is_zero()) fail(ErrorCode::NotCoprime, "resultant vanishes identically: P and Q share a factor");
  // With a squarefree A the gcd is squarefree already.
  UPoly<K> g = a.is_zero() ? squarefree_part(res) : gcd_monic(res, a);

  // Q(alpha, Y) == 0 above the roots of its content; there the fiber is P.
  UPoly<K> cont = q.back();
  for (const auto& c : q) {
    if (!c.is_zero()) cont = gcd_monic(cont, c);
  }
  UPoly<K> vanishing = cont.degree() > 0 ? gcd_monic(g, cont) : dom.one();
  if (vanishing.degree() > 0) g = exact_div(g, vanishing);
  for (int i = 1; i <= qdeg && g.degree() > 0; ++i) {
    const bool top = i == qdeg && pdeg == qdeg;
    UPoly<K> gi = top ? dom.one() : gcd_monic(g, seq.principal[static_cast<std::size_t>(i)]);
    UPoly<K> ai = exact_div(g, gi);
    if (ai.degree() > 0) out.push_back({i, make_monic(ai), seq[static_cast<std::size_t>(i)]});
    g = std::move(gi);
  }
  if (vanishing.degree() > 0) out.push_back({pdeg, vanishing, p});
  return out;
}

/// ModPoly entry point; A is a polynomial in X or zero.
inline std::vector<TriangularPair<PrimeField>> triangular_decompose(const ModPoly& p, const ModPoly& q,
                                                                    const UPoly<PrimeField>& a) {
  const UnivariateDomain<PrimeField> dom{p.ring(), Var::X};
  return triangular_decompose(dom, to_ypoly(p, Var::Y, dom), to_ypoly(q, Var::Y, dom), a);
}

}  // namespace sepform
