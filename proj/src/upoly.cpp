#include "sepform/upoly.hpp"

namespace sepform {

BigInt content(const UPoly<IntegerRing>& f) {
  BigInt g;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly<IntegerRing> primitive_part(const UPoly<IntegerRing>& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.lc().sign() < 0) c = -c;
  if (c.is_one()) return f;
  std::vector<BigInt> v;
  v.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) v.push_back(div_exact(x, c));
  return UPoly<IntegerRing>(IntegerRing{}, std::move(v));
}

UPoly<IntegerRing> gcd_primitive(UPoly<IntegerRing> f, UPoly<IntegerRing> g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
  if (f.degree() < g.degree()) std::swap(f, g);
  f = primitive_part(f);
  g = primitive_part(g);
  while (!g.is_zero()) {
    UPoly<IntegerRing> r = primitive_part(prem(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

UPoly<IntegerRing> squarefree_part(const UPoly<IntegerRing>& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "squarefree part of the zero polynomial");
  if (f.degree() <= 0) return UPoly<IntegerRing>::constant(IntegerRing{}, BigInt(1));
  const UPoly<IntegerRing> g = gcd_primitive(f, f.derivative());
  return primitive_part(exact_div(primitive_part(f), g));
}

UPoly<PrimeField> reduce_mod_prime(const UPoly<IntegerRing>& f, const PrimeField& field) {
  std::vector<std::uint64_t> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(field.from_bigint(c));
  return UPoly<PrimeField>(field, std::move(v));
}

}  // namespace sepform
