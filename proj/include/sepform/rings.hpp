#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "sepform/bigint.hpp"
#include "sepform/errors.hpp"

namespace sepform {

/// Largest modulus accepted by PrimeField. Products of two residues must fit
/// in an unsigned 128-bit intermediate, and sums in 64 bits.
inline constexpr std::uint64_t kMaxWordModulus = (std::uint64_t{1} << 62);

bool is_prime_u64(std::uint64_t n);

/// The ring of integers. Stateless.
struct IntegerRing {
  using Elem = BigInt;
  static constexpr bool is_field = false;

  Elem zero() const { return BigInt(); }
  Elem one() const { return BigInt(1); }
  Elem from_int(std::int64_t v) const { return BigInt(v); }
  Elem from_bigint(const BigInt& v) const { return v; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a.is_one(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div_exact(const Elem& a, const Elem& b) const { return sepform::div_exact(a, b); }
  std::string to_string(const Elem& a) const { return a.to_string(); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// The rationals. Stateless.
struct RationalField {
  using Elem = Rational;
  static constexpr bool is_field = true;

  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem from_int(std::int64_t v) const { return Rational(v); }
  Elem from_bigint(const BigInt& v) const { return Rational(v); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a == Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return Rational(1) / a; }
  Elem div_exact(const Elem& a, const Elem& b) const { return a / b; }
  /// Characteristic zero.
  std::uint64_t characteristic() const { return 0; }
  std::string to_string(const Elem& a) const { return a.to_string(); }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/mu for a word-sized prime mu. Residues are canonical, in [0, mu).
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  /// Throws Overflow when mu exceeds kMaxWordModulus and InvalidArgument when
  /// mu is not prime.
  explicit PrimeField(std::uint64_t modulus) : p_(modulus) {
    if (modulus >= kMaxWordModulus) {
      fail(ErrorCode::Overflow, "modulus " + std::to_string(modulus) + " exceeds the word-sized limit");
    }
    if (!is_prime_u64(modulus)) fail(ErrorCode::InvalidArgument, std::to_string(modulus) + " is not prime");
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    const std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
  }
  Elem from_bigint(const BigInt& v) const { return v.mod_u64(p_); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    if (p_ < (std::uint64_t{1} << 32)) return (a * b) % p_;
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Throws NotInvertible on zero.
  Elem inv(Elem a) const {
    if (a == 0) fail(ErrorCode::NotInvertible, "zero has no inverse modulo " + std::to_string(p_));
    // Extended Euclid on signed 128-bit to stay exact for moduli near 2^62.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
      const __int128 q = r / new_r;
      const __int128 tt = t - q * new_t;
      t = new_t;
      new_t = tt;
      const __int128 rr = r - q * new_r;
      r = new_r;
      new_r = rr;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div_exact(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string to_string(Elem a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Operations every coefficient ring exposes. Elements are values; the ring
/// object carries whatever context (the modulus) the operations need.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Elem& a, std::int64_t v) {
  { r.zero() } -> std::convertible_to<typename R::Elem>;
  { r.one() } -> std::convertible_to<typename R::Elem>;
  { r.from_int(v) } -> std::convertible_to<typename R::Elem>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.add(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.neg(a) } -> std::convertible_to<typename R::Elem>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.div_exact(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
};

template <class R>
concept Field = CoefficientRing<R> && R::is_field && requires(const R& r, const typename R::Elem& a) {
  { r.inv(a) } -> std::convertible_to<typename R::Elem>;
  { r.characteristic() } -> std::convertible_to<std::uint64_t>;
};

}  // namespace sepform
