#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepform/errors.hpp"
#include "sepform/rings.hpp"
#include "sepform/upoly.hpp"

namespace sepform {

enum class Var : std::uint8_t { X = 0, Y = 1, T = 2, S = 3 };
inline constexpr std::size_t kNumVars = 4;

inline char var_name(Var v) { return "XYTS"[static_cast<std::size_t>(v)]; }

/// Subset of {X, Y, T, S}, listed in that order.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vs) {
    for (Var v : vs) bits_ |= bit(v);
  }
  constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  constexpr VarSet with(Var v) const { return from_bits(bits_ | bit(v)); }
  constexpr VarSet without(Var v) const { return from_bits(bits_ & ~bit(v)); }
  constexpr VarSet united(VarSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr bool subset_of(VarSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<Var> list() const {
    std::vector<Var> out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (bits_ & (1u << i)) out.push_back(static_cast<Var>(i));
    }
    return out;
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  friend constexpr bool operator==(VarSet, VarSet) = default;

 private:
  static constexpr std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v)); }
  static constexpr VarSet from_bits(std::uint8_t b) {
    VarSet s;
    s.bits_ = b;
    return s;
  }
  std::uint8_t bits_ = 0;
};

/// Exponent vector indexed by Var. Ordered lexicographically with X most
/// significant.
using Exponents = std::array<std::uint32_t, kNumVars>;

/// Sparse multivariate polynomial in a subset of {X, Y, T, S}. Zero
/// coefficients are never stored.
template <CoefficientRing R>
class MPoly {
 public:
  using Ring = R;
  using Elem = typename R::Elem;
  using TermMap = std::map<Exponents, Elem>;

  MPoly(R ring, VarSet vars) : ring_(std::move(ring)), vars_(vars) {}

  static MPoly constant(const R& ring, VarSet vars, Elem c) {
    MPoly p(ring, vars);
    p.add_term(Exponents{}, std::move(c));
    return p;
  }
  static MPoly variable(const R& ring, VarSet vars, Var v) {
    if (!vars.contains(v)) fail(ErrorCode::InvalidArgument, std::string("variable ") + var_name(v) + " not declared");
    MPoly p(ring, vars);
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    p.add_term(e, ring.one());
    return p;
  }
  static MPoly monomial(const R& ring, VarSet vars, Exponents e, Elem c) {
    MPoly p(ring, vars);
    p.add_term(e, std::move(c));
    return p;
  }

  const R& ring() const { return ring_; }
  VarSet vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Adds c to the coefficient of the monomial e.
  void add_term(const Exponents& e, const Elem& c) {
    if (ring_.is_zero(c)) return;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] != 0 && !vars_.contains(static_cast<Var>(i))) {
        fail(ErrorCode::InvalidArgument, std::string("exponent on undeclared variable ") + var_name(static_cast<Var>(i)));
      }
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Elem coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  int degree(Var v) const {
    if (is_zero()) return kZeroPolyDegree;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
    return static_cast<int>(d);
  }

  int total_degree() const {
    if (is_zero()) return kZeroPolyDegree;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return static_cast<int>(d);
  }

  /// Coefficient of v^k, as a polynomial over the same variable set with no
  /// occurrence of v.
  MPoly coeff_in(Var v, std::uint32_t k) const {
    MPoly out(ring_, vars_);
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      if (e[idx] != k) continue;
      Exponents f = e;
      f[idx] = 0;
      out.terms_.emplace(f, c);
    }
    return out;
  }

  /// Leading coefficient with respect to v.
  MPoly lc_in(Var v) const {
    if (is_zero()) return *this;
    return coeff_in(v, static_cast<std::uint32_t>(degree(v)));
  }

  /// Substitutes v := value. The result no longer lists v.
  MPoly evaluate(Var v, const Elem& value) const {
    if (!vars_.contains(v)) fail(ErrorCode::InvalidArgument, std::string("evaluate: variable ") + var_name(v) + " not present");
    MPoly out(ring_, vars_.without(v));
    const auto idx = static_cast<std::size_t>(v);
    std::vector<Elem> powers{ring_.one()};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[idx]) powers.push_back(ring_.mul(powers.back(), value));
      Exponents f = e;
      f[idx] = 0;
      out.add_term(f, ring_.mul(c, powers[e[idx]]));
    }
    return out;
  }

  MPoly derivative(Var v) const {
    MPoly out(ring_, vars_);
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponents f = e;
      f[idx] -= 1;
      out.add_term(f, ring_.mul(ring_.from_int(static_cast<std::int64_t>(e[idx])), c));
    }
    return out;
  }

  MPoly scaled(const Elem& s) const {
    MPoly out(ring_, vars_);
    if (ring_.is_zero(s)) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, ring_.mul(s, c));
    return out;
  }

  /// Same polynomial over a larger variable set.
  MPoly with_vars(VarSet vars) const {
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] != 0 && !vars.contains(static_cast<Var>(i))) {
          fail(ErrorCode::InvalidArgument, "with_vars: polynomial uses a dropped variable");
        }
      }
    }
    MPoly out = *this;
    out.vars_ = vars;
    return out;
  }

  MPoly pow(unsigned e) const {
    MPoly r = constant(ring_, vars_, ring_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    vars_ = vars_.united(o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    vars_ = vars_.united(o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return a.scaled(a.ring_.neg(a.ring_.one())); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.ring_, a.vars_.united(b.vars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, a.ring_.mul(ca, cb));
      }
    }
    return out;
  }

  /// Compares terms only; the declared variable sets may differ.
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  /// Applies a coefficient map into another ring, dropping zero images.
  template <CoefficientRing R2, class F>
  MPoly<R2> map_coefficients(const R2& ring2, F&& f) const {
    MPoly<R2> out(ring2, vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Human-readable form, highest monomials first, e.g. "X^2 + Y^2 - 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = ring_.to_string(c);
      const bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(static_cast<Var>(i));
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  R ring_;
  VarSet vars_;
  TermMap terms_;
};

using IntPoly = MPoly<IntegerRing>;
using ModPoly = MPoly<PrimeField>;
using RatPoly = MPoly<RationalField>;

/// Quotient when g divides f exactly; lex-leading-term division. Throws
/// InexactDivision otherwise.
template <CoefficientRing R>
MPoly<R> exact_div(const MPoly<R>& f, const MPoly<R>& g) {
  if (g.is_zero()) fail(ErrorCode::InexactDivision, "exact_div by the zero polynomial");
  const R& ring = f.ring();
  MPoly<R> q(ring, f.vars().united(g.vars()));
  MPoly<R> r = f;
  const auto& [ge, gc] = *g.terms().rbegin();
  while (!r.is_zero()) {
    const auto [re, rc] = *r.terms().rbegin();
    Exponents e;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (re[i] < ge[i]) fail(ErrorCode::InexactDivision, "exact_div: leading monomial not divisible");
      e[i] = re[i] - ge[i];
    }
    const auto c = ring.div_exact(rc, gc);
    const MPoly<R> t = MPoly<R>::monomial(ring, q.vars(), e, c);
    q += t;
    r -= t * g;
  }
  return q;
}

/// Dense univariate view of f in variable v. Throws if f involves any other
/// variable.
template <CoefficientRing R>
UPoly<R> to_upoly(const MPoly<R>& f, Var v) {
  std::vector<typename R::Elem> c;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, x] : f.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i != idx && e[i] != 0) fail(ErrorCode::InvalidArgument, std::string("to_upoly: polynomial is not univariate in ") + var_name(v));
    }
    if (c.size() <= e[idx]) c.resize(e[idx] + 1, f.ring().zero());
    c[e[idx]] = x;
  }
  return UPoly<R>(f.ring(), std::move(c));
}

template <CoefficientRing R>
MPoly<R> from_upoly(const UPoly<R>& u, Var v, VarSet vars) {
  MPoly<R> out(u.ring(), vars.with(v));
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(k);
    out.add_term(e, u.coeffs()[k]);
  }
  return out;
}

/// Coefficientwise reduction phi_mu, dropping vanishing terms.
ModPoly reduce_mod_prime(const IntPoly& f, const PrimeField& field);

/// Largest coefficient bitsize; 1 for the zero polynomial.
std::size_t bitsize(const IntPoly& f);

/// Exact image of an integer polynomial in Q[vars].
RatPoly to_rational(const IntPoly& f);

}  // namespace sepform
