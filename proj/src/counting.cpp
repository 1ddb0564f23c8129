#include "sepform/counting.hpp"

#include <utility>

#include "sepform/shear.hpp"

namespace sepform {

namespace {

using Dom = UnivariateDomain<PrimeField>;
using Poly = UPoly<PrimeField>;
using Bivar = XYPoly<PrimeField>;

int ydeg(const Bivar& f) { return ydegree<Dom>(f); }

/// Monic (in Y) generator of gcd(f, f') over F_mu(X), for f monic in Y.
Bivar monic_gcd_with_derivative(const Dom& dom, const Bivar& f) {
  const Bivar fd = yderivative(dom, f);
  const auto seq = subresultant_sequence(dom, f, fd);
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k].empty()) continue;
    // Gauss: a monic divisor of a monic polynomial is the primitive part up
    // to a scalar.
    Poly content = seq[k].back();
    for (const auto& c : seq[k]) {
      if (!c.is_zero()) content = gcd_monic(content, c);
    }
    Bivar g;
    for (const auto& c : seq[k]) g.push_back(exact_div(c, content));
    const auto lead = g.back();
    if (lead.degree() != 0) fail(ErrorCode::InexactDivision, "gcd with derivative is not monic after normalization");
    const auto inv = dom.ring.inv(lead.lc());
    for (auto& c : g) c = c.scaled(inv);
    return g;
  }
  return {dom.one()};
}

/// Long division by a polynomial monic in Y.
Bivar divide_by_monic(const Dom& dom, Bivar f, const Bivar& g) {
  const int dg = ydeg(g);
  const int df = ydeg(f);
  if (df < dg) fail(ErrorCode::InexactDivision, "division by a polynomial of larger degree");
  Bivar quo(static_cast<std::size_t>(df - dg + 1), dom.zero());
  for (int i = df; i >= dg; --i) {
    const auto c = f[static_cast<std::size_t>(i)];
    quo[static_cast<std::size_t>(i - dg)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = f[static_cast<std::size_t>(i - dg + j)];
      slot = slot - c * g[static_cast<std::size_t>(j)];
    }
  }
  ytrim(dom, f);
  if (!f.empty()) fail(ErrorCode::InexactDivision, "inexact division by a monic polynomial");
  ytrim(dom, quo);
  return quo;
}

}  // namespace

std::uint64_t choose_shear_value(const ModPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "shear of the zero polynomial");
  const PrimeField& f = p.ring();
  const auto lp = shear_leading_coeff(p);
  const auto d = static_cast<std::uint64_t>(std::max(p.total_degree(), 0));
  for (std::uint64_t b = 0; b <= d; ++b) {
    if (!f.is_zero(lp.eval(f.from_int(static_cast<std::int64_t>(b))))) return b;
  }
  fail(ErrorCode::InvalidArgument, "no shear value in 0..d; the prime is too small");
}

CountTrace count_distinct_mod(const ModPoly& p, const ModPoly& q, std::optional<std::uint64_t> forced_b) {
  const PrimeField& field = p.ring();
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::InvalidArgument, "counting with a zero polynomial");
  const int d = system_degree(p, q);
  if (field.modulus() <= static_cast<std::uint64_t>(d)) {
    fail(ErrorCode::InvalidArgument, "the prime must exceed the total degree");
  }
  CountTrace trace;
  trace.b = forced_b ? *forced_b : choose_shear_value(p);
  const auto b = field.from_int(static_cast<std::int64_t>(trace.b));
  const Dom dom{field, Var::X};
  Bivar ps = to_ypoly(shear_by(p, b), Var::Y, dom);
  Bivar qs = to_ypoly(shear_by(q, b), Var::Y, dom);
  if (ps.back().degree() != 0) fail(ErrorCode::InvalidArgument, "shear value leaves a non-constant leading coefficient");
  // Second argument: smaller Y-degree; on ties the one with constant leading coefficient.
  if (ydeg(qs) > ydeg(ps) || (ydeg(qs) == ydeg(ps) && qs.back().degree() != 0)) std::swap(ps, qs);

  const Poly none(field, {});
  const auto first = triangular_decompose(dom, ps, qs, none);
  for (const auto& pair : first) {
    CountComponent comp{pair.index, pair.index, false, pair.a, pair.b, {}, {}};
    const Poly inv = invert_mod(pair.b.back(), pair.a);
    Bivar bt;
    for (const auto& c : pair.b) bt.push_back(rem(inv * c, pair.a));
    ytrim(dom, bt);
    if (ydeg(bt) != pair.index || bt.back().degree() != 0 || !field.is_one(bt.back().lc())) {
      fail(ErrorCode::InvalidArgument, "fiber polynomial is not monic of the expected degree");
    }
    Bivar deriv = yderivative(dom, bt);
    if (ydeg(bt) > 0) {
      const auto seq = subresultant_sequence(dom, bt, deriv);
      if (ycoeff(dom, seq.resultant(), 0).is_zero()) {
        bt = divide_by_monic(dom, bt, monic_gcd_with_derivative(dom, bt));
        deriv = yderivative(dom, bt);
        comp.squarefree_fallback = true;
      }
    }
    comp.b_monic = bt;
    comp.reduced_index = ydeg(bt);
    if (comp.reduced_index > 0 && !deriv.empty()) comp.second = triangular_decompose(dom, bt, deriv, pair.a);
    std::int64_t n = static_cast<std::int64_t>(comp.reduced_index) * pair.a.degree();
    for (const auto& s : comp.second) n -= static_cast<std::int64_t>(s.index) * s.a.degree();
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative component count");
    trace.count += static_cast<std::size_t>(n);
    trace.components.push_back(std::move(comp));
  }
  return trace;
}

}  // namespace sepform
