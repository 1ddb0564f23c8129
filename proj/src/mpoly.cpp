#include "sepform/mpoly.hpp"

namespace sepform {

ModPoly reduce_mod_prime(const IntPoly& f, const PrimeField& field) {
  return f.map_coefficients(field, [&](const BigInt& c) { return field.from_bigint(c); });
}

std::size_t bitsize(const IntPoly& f) {
  std::size_t b = 1;
  for (const auto& [e, c] : f.terms()) b = std::max(b, c.bitsize());
  return b;
}

RatPoly to_rational(const IntPoly& f) {
  return f.map_coefficients(RationalField{}, [](const BigInt& c) { return Rational(c); });
}

}  // namespace sepform
