#pragma once

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "sepform/mpoly.hpp"
#include "sepform/rings.hpp"
#include "sepform/upoly.hpp"

namespace sepform {

// Coefficient domains for polynomials in Y. A domain is an integral domain
// with exact division; it is what the subresultant machinery is generic over.

/// The coefficient ring itself (univariate polynomials in Y).
template <CoefficientRing R>
struct ScalarDomain {
  using Elem = typename R::Elem;
  R ring;

  Elem zero() const { return ring.zero(); }
  Elem one() const { return ring.one(); }
  bool is_zero(const Elem& a) const { return ring.is_zero(a); }
  Elem add(const Elem& a, const Elem& b) const { return ring.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return ring.sub(a, b); }
  Elem neg(const Elem& a) const { return ring.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return ring.mul(a, b); }
  Elem div_exact(const Elem& a, const Elem& b) const { return ring.div_exact(a, b); }
  std::optional<Elem> try_div(const Elem& a, const Elem& b) const {
    if (ring.is_zero(b)) return std::nullopt;
    if constexpr (R::is_field) {
      return ring.div_exact(a, b);
    } else {
      if (!divides(b, a)) return std::nullopt;
      return ring.div_exact(a, b);
    }
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

/// Dense univariate polynomials over R in one variable (X, or T).
template <CoefficientRing R>
struct UnivariateDomain {
  using Elem = UPoly<R>;
  R ring;
  Var var = Var::X;

  Elem zero() const { return Elem(ring); }
  Elem one() const { return Elem::constant(ring, ring.one()); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div_exact(const Elem& a, const Elem& b) const {
    if (b.degree() == 0) {
      std::vector<typename R::Elem> v;
      v.reserve(a.coeffs().size());
      for (const auto& c : a.coeffs()) v.push_back(ring.div_exact(c, b.lc()));
      return Elem(ring, std::move(v));
    }
    return exact_div(a, b);
  }
  std::optional<Elem> try_div(const Elem& a, const Elem& b) const {
    if (b.is_zero()) return std::nullopt;
    try {
      return div_exact(a, b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InexactDivision) return std::nullopt;
      throw;
    }
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

/// Sparse multivariate polynomials over R in a fixed set of variables.
template <CoefficientRing R>
struct MultivariateDomain {
  using Elem = MPoly<R>;
  R ring;
  VarSet vars;

  Elem zero() const { return Elem(ring, vars); }
  Elem one() const { return Elem::constant(ring, vars, ring.one()); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div_exact(const Elem& a, const Elem& b) const { return exact_div(a, b); }
  std::optional<Elem> try_div(const Elem& a, const Elem& b) const {
    if (b.is_zero()) return std::nullopt;
    try {
      return exact_div(a, b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InexactDivision) return std::nullopt;
      throw;
    }
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

template <class D>
concept CoefficientDomain = requires(const D& d, const typename D::Elem& a) {
  { d.zero() } -> std::convertible_to<typename D::Elem>;
  { d.one() } -> std::convertible_to<typename D::Elem>;
  { d.is_zero(a) } -> std::convertible_to<bool>;
  { d.add(a, a) } -> std::convertible_to<typename D::Elem>;
  { d.sub(a, a) } -> std::convertible_to<typename D::Elem>;
  { d.neg(a) } -> std::convertible_to<typename D::Elem>;
  { d.mul(a, a) } -> std::convertible_to<typename D::Elem>;
  { d.div_exact(a, a) } -> std::convertible_to<typename D::Elem>;
  { d.try_div(a, a) } -> std::convertible_to<std::optional<typename D::Elem>>;
};

/// Dense polynomial in Y over a domain, lowest degree first, no trailing
/// zero coefficient.
template <CoefficientDomain D>
using YPoly = std::vector<typename D::Elem>;

template <CoefficientDomain D>
int ydegree(const YPoly<D>& f) {
  return f.empty() ? kZeroPolyDegree : static_cast<int>(f.size()) - 1;
}

template <CoefficientDomain D>
void ytrim(const D& dom, YPoly<D>& f) {
  while (!f.empty() && dom.is_zero(f.back())) f.pop_back();
}

template <CoefficientDomain D>
typename D::Elem ylc(const D& dom, const YPoly<D>& f) {
  return f.empty() ? dom.zero() : f.back();
}

template <CoefficientDomain D>
typename D::Elem ycoeff(const D& dom, const YPoly<D>& f, std::size_t k) {
  return k < f.size() ? f[k] : dom.zero();
}

template <CoefficientDomain D>
YPoly<D> yscale(const D& dom, const YPoly<D>& f, const typename D::Elem& s) {
  YPoly<D> out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(dom.mul(s, c));
  ytrim(dom, out);
  return out;
}

template <CoefficientDomain D>
YPoly<D> ydiv_exact(const D& dom, const YPoly<D>& f, const typename D::Elem& s) {
  YPoly<D> out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(dom.div_exact(c, s));
  return out;
}

template <CoefficientDomain D>
YPoly<D> yneg(const D& dom, const YPoly<D>& f) {
  YPoly<D> out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(dom.neg(c));
  return out;
}

template <CoefficientDomain D>
YPoly<D> yderivative(const D& dom, const YPoly<D>& f) {
  YPoly<D> out;
  for (std::size_t k = 1; k < f.size(); ++k) {
    typename D::Elem c = f[k];
    // k * c by repeated addition keeps the domain interface minimal.
    typename D::Elem acc = dom.zero();
    for (std::size_t t = 0; t < k; ++t) acc = dom.add(acc, c);
    out.push_back(std::move(acc));
  }
  ytrim(dom, out);
  return out;
}

/// Pseudo-remainder in D[Y]: lc(g)^(deg f - deg g + 1) f = q g + r.
template <CoefficientDomain D>
YPoly<D> yprem(const D& dom, const YPoly<D>& f, const YPoly<D>& g) {
  if (g.empty()) fail(ErrorCode::InvalidArgument, "pseudo-remainder by zero");
  const int dg = ydegree<D>(g);
  const int df = ydegree<D>(f);
  if (df < dg) return f;
  YPoly<D> r = f;
  const auto& b = g.back();
  for (int i = df; i >= dg; --i) {
    const auto top = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x = dom.mul(x, b);
    if (!dom.is_zero(top)) {
      for (int j = 0; j <= dg; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - dg + j)];
        slot = dom.sub(slot, dom.mul(top, g[static_cast<std::size_t>(j)]));
      }
    }
    r.pop_back();
  }
  ytrim(dom, r);
  return r;
}

/// Splits f into a dense polynomial in `y` whose coefficients live in `dom`.
template <CoefficientRing R>
YPoly<UnivariateDomain<R>> to_ypoly(const MPoly<R>& f, Var y, const UnivariateDomain<R>& dom) {
  YPoly<UnivariateDomain<R>> out;
  const auto yi = static_cast<std::size_t>(y);
  const auto xi = static_cast<std::size_t>(dom.var);
  std::vector<std::vector<typename R::Elem>> dense;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i != yi && i != xi && e[i] != 0) {
        fail(ErrorCode::InvalidArgument, std::string("to_ypoly: unexpected variable ") + var_name(static_cast<Var>(i)));
      }
    }
    if (dense.size() <= e[yi]) dense.resize(e[yi] + 1);
    auto& row = dense[e[yi]];
    if (row.size() <= e[xi]) row.resize(e[xi] + 1, dom.ring.zero());
    row[e[xi]] = c;
  }
  for (auto& row : dense) out.emplace_back(dom.ring, std::move(row));
  ytrim(dom, out);
  return out;
}

template <CoefficientRing R>
YPoly<MultivariateDomain<R>> to_ypoly(const MPoly<R>& f, Var y, const MultivariateDomain<R>& dom) {
  YPoly<MultivariateDomain<R>> out;
  const int dy = f.degree(y);
  for (int k = 0; k <= dy; ++k) {
    out.push_back(f.coeff_in(y, static_cast<std::uint32_t>(k)).with_vars(dom.vars));
  }
  return out;
}

template <CoefficientRing R>
YPoly<ScalarDomain<R>> to_ypoly(const MPoly<R>& f, Var y, const ScalarDomain<R>&) {
  const UPoly<R> u = to_upoly(f, y);
  return u.coeffs();
}

template <CoefficientRing R>
MPoly<R> from_ypoly(const YPoly<UnivariateDomain<R>>& f, Var y, const UnivariateDomain<R>& dom) {
  MPoly<R> out(dom.ring, VarSet{dom.var, y});
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& cs = f[k].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      Exponents e{};
      e[static_cast<std::size_t>(y)] = static_cast<std::uint32_t>(k);
      e[static_cast<std::size_t>(dom.var)] = static_cast<std::uint32_t>(j);
      out.add_term(e, cs[j]);
    }
  }
  return out;
}

template <CoefficientRing R>
MPoly<R> from_ypoly(const YPoly<MultivariateDomain<R>>& f, Var y, const MultivariateDomain<R>& dom) {
  MPoly<R> out(dom.ring, dom.vars.with(y));
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (const auto& [e, c] : f[k].terms()) {
      Exponents g = e;
      g[static_cast<std::size_t>(y)] = static_cast<std::uint32_t>(k);
      out.add_term(g, c);
    }
  }
  return out;
}

template <CoefficientRing R>
MPoly<R> from_ypoly(const YPoly<ScalarDomain<R>>& f, Var y, const ScalarDomain<R>& dom) {
  return from_upoly(UPoly<R>(dom.ring, f), y, VarSet{y});
}

}  // namespace sepform
