#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "sepform/errors.hpp"
#include "sepform/rings.hpp"

namespace sepform {

/// Degree reported for the zero polynomial. Distinct from the degree of a
/// nonzero constant.
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial, coefficients stored from degree 0 upwards.
/// The leading stored coefficient is never zero.
template <CoefficientRing R>
class UPoly {
 public:
  using Ring = R;
  using Elem = typename R::Elem;

  UPoly() requires std::is_default_constructible_v<R> = default;
  explicit UPoly(R ring) : ring_(std::move(ring)) {}
  UPoly(R ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const R& ring, Elem v) { return UPoly(ring, std::vector<Elem>{std::move(v)}); }
  /// c * x^k
  static UPoly monomial(const R& ring, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, ring.zero());
    v[k] = std::move(c);
    return UPoly(ring, std::move(v));
  }
  /// Builds from small integer coefficients, lowest degree first.
  static UPoly from_ints(const R& ring, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Elem> v;
    for (auto c : coeffs) v.push_back(ring.from_int(c));
    return UPoly(ring, std::move(v));
  }

  const R& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ring_.zero(); }
  /// Leading coefficient; zero for the zero polynomial.
  Elem lc() const { return c_.empty() ? ring_.zero() : c_.back(); }

  Elem eval(const Elem& x) const {
    Elem acc = ring_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, x), c_[i]);
    return acc;
  }

  UPoly derivative() const {
    std::vector<Elem> v;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      v.push_back(ring_.mul(ring_.from_int(static_cast<std::int64_t>(k)), c_[k]));
    }
    return UPoly(ring_, std::move(v));
  }

  UPoly scaled(const Elem& s) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) v[k] = ring_.mul(s, c_[k]);
    return UPoly(ring_, std::move(v));
  }

  /// Multiply by x^k.
  UPoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(k, ring_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(ring_, std::move(v));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = ring_.add(c_[k], o.c_[k]);
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = ring_.sub(c_[k], o.c_[k]);
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return a.scaled(a.ring_.neg(a.ring_.one())); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) { return multiply(a, b); }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (!(a.c_[k] == b.c_[k])) return false;
    }
    return true;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  static UPoly multiply(const UPoly& a, const UPoly& b);

  R ring_;
  std::vector<Elem> c_;
};

template <CoefficientRing R>
UPoly<R> UPoly<R>::multiply(const UPoly& a, const UPoly& b) {
  const R& ring = a.ring_;
  if (a.is_zero() || b.is_zero()) return UPoly(ring);
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  if constexpr (std::is_same_v<R, PrimeField>) {
    const std::uint64_t p = ring.modulus();
    std::vector<std::uint64_t> out(n);
    if (p < (std::uint64_t{1} << 32)) {
      // Products fit in 64 bits; accumulate in 128 and reduce once per slot.
      std::vector<unsigned __int128> acc(n, 0);
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const std::uint64_t ai = a.c_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * b.c_[j];
      }
      for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint64_t>(acc[k] % p);
    } else {
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a.c_[i], b.c_[j]));
      }
    }
    return UPoly(ring, std::move(out));
  } else {
    std::vector<Elem> out(n, ring.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a.c_[i], b.c_[j]));
    }
    return UPoly(ring, std::move(out));
  }
}

template <CoefficientRing R>
std::string UPoly<R>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (ring_.is_zero(c_[k])) continue;
    std::string c = ring_.to_string(c_[k]);
    const bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

template <Field K>
struct DivRem {
  UPoly<K> quotient;
  UPoly<K> remainder;
};

/// Euclidean division over a field.
template <Field K>
DivRem<K> divrem(const UPoly<K>& f, const UPoly<K>& g) {
  const K& k = f.ring();
  if (g.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<typename K::Elem> r = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {UPoly<K>(k), f};
  std::vector<typename K::Elem> q(static_cast<std::size_t>(f.degree() - dg + 1), k.zero());
  const auto inv_lc = k.inv(g.lc());
  const auto& gc = g.coeffs();
  for (int i = f.degree(); i >= dg; --i) {
    const auto c = k.mul(r[static_cast<std::size_t>(i)], inv_lc);
    if (k.is_zero(c)) continue;
    q[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - dg + j)];
      slot = k.sub(slot, k.mul(c, gc[static_cast<std::size_t>(j)]));
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {UPoly<K>(k, std::move(q)), UPoly<K>(k, std::move(r))};
}

template <Field K>
UPoly<K> rem(const UPoly<K>& f, const UPoly<K>& g) {
  return divrem(f, g).remainder;
}

/// Quotient f/g when g divides f exactly. Works over any coefficient ring
/// whose leading-coefficient divisions are exact; throws InexactDivision
/// otherwise.
template <CoefficientRing R>
UPoly<R> exact_div(const UPoly<R>& f, const UPoly<R>& g) {
  const R& ring = f.ring();
  if (g.is_zero()) fail(ErrorCode::InexactDivision, "exact_div by the zero polynomial");
  if (f.is_zero()) return UPoly<R>(ring);
  const int df = f.degree();
  const int dg = g.degree();
  if (df < dg) fail(ErrorCode::InexactDivision, "exact_div: divisor has larger degree");
  std::vector<typename R::Elem> r = f.coeffs();
  std::vector<typename R::Elem> q(static_cast<std::size_t>(df - dg + 1), ring.zero());
  const auto& gc = g.coeffs();
  for (int i = df; i >= dg; --i) {
    const auto& top = r[static_cast<std::size_t>(i)];
    if (ring.is_zero(top)) continue;
    const auto c = ring.div_exact(top, g.lc());
    q[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - dg + j)];
      slot = ring.sub(slot, ring.mul(c, gc[static_cast<std::size_t>(j)]));
    }
  }
  for (int i = 0; i < dg; ++i) {
    if (!ring.is_zero(r[static_cast<std::size_t>(i)])) {
      fail(ErrorCode::InexactDivision, "exact_div: nonzero remainder");
    }
  }
  return UPoly<R>(ring, std::move(q));
}

template <Field K>
UPoly<K> make_monic(const UPoly<K>& f) {
  if (f.is_zero() || f.ring().is_one(f.lc())) return f;
  return f.scaled(f.ring().inv(f.lc()));
}

/// Monic gcd over a field by the Euclidean remainder sequence. gcd(0, 0) is
/// rejected.
template <Field K>
UPoly<K> gcd_monic(UPoly<K> f, UPoly<K> g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
  while (!g.is_zero()) {
    UPoly<K> r = rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(f);
}

/// Squarefree part f / gcd(f, f'), monic. Requires characteristic zero or
/// larger than deg(f); throws Inseparable otherwise.
template <Field K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "squarefree part of the zero polynomial");
  const std::uint64_t ch = f.ring().characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(f.degree())) {
    fail(ErrorCode::Inseparable, "characteristic " + std::to_string(ch) + " does not exceed degree " +
                                     std::to_string(f.degree()));
  }
  if (f.degree() <= 0) return make_monic(f);
  const UPoly<K> g = gcd_monic(f, f.derivative());
  return make_monic(exact_div(f, g));
}

/// r with r*c = 1 mod a and deg r < deg a. Throws NotInvertible when
/// gcd(c, a) is not 1.
template <Field K>
UPoly<K> invert_mod(const UPoly<K>& c, const UPoly<K>& a) {
  const K& k = c.ring();
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "invert_mod: zero modulus");
  if (a.degree() == 0) return UPoly<K>(k);  // every residue class is zero
  UPoly<K> r0 = a;
  UPoly<K> r1 = rem(c, a);
  UPoly<K> t0(k);
  UPoly<K> t1 = UPoly<K>::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UPoly<K> t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.degree() != 0) fail(ErrorCode::NotInvertible, "invert_mod: arguments are not coprime");
  return rem(t0.scaled(k.inv(r0.lc())), a);
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + r, deg r < deg g.
template <CoefficientRing R>
UPoly<R> prem(const UPoly<R>& f, const UPoly<R>& g) {
  const R& ring = f.ring();
  if (g.is_zero()) fail(ErrorCode::InvalidArgument, "prem by zero");
  const int dg = g.degree();
  if (f.degree() < dg) return f;
  std::vector<typename R::Elem> r = f.coeffs();
  const auto& gc = g.coeffs();
  const auto b = g.lc();
  for (int i = f.degree(); i >= dg; --i) {
    const auto top = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x = ring.mul(x, b);
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - dg + j)];
      slot = ring.sub(slot, ring.mul(top, gc[static_cast<std::size_t>(j)]));
    }
    r.pop_back();
  }
  return UPoly<R>(ring, std::move(r));
}

/// Gcd of the integer coefficients, nonnegative.
BigInt content(const UPoly<IntegerRing>& f);

/// f divided by its content, with positive leading coefficient.
UPoly<IntegerRing> primitive_part(const UPoly<IntegerRing>& f);

/// Primitive gcd over Z[x] (positive leading coefficient), which is the
/// rational gcd up to a scalar. Primitive remainder sequence.
UPoly<IntegerRing> gcd_primitive(UPoly<IntegerRing> f, UPoly<IntegerRing> g);

/// Squarefree part over Q, returned as a primitive integer polynomial.
UPoly<IntegerRing> squarefree_part(const UPoly<IntegerRing>& f);

/// Coefficientwise reduction modulo a prime.
UPoly<PrimeField> reduce_mod_prime(const UPoly<IntegerRing>& f, const PrimeField& field);

}  // namespace sepform
