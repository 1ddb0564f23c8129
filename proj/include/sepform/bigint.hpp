#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sepform {

/// Arbitrary-precision signed integer.
///
/// Thin value type over GMP's mpz_class. GMP keeps limbs canonical, so two
/// equal integers always have identical representations.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws ParseError.
  static BigInt from_string(std::string_view text);

  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool fits_int64() const;
  std::int64_t to_int64() const;

  /// Number of bits of |z|; 1 for zero.
  std::size_t bitsize() const;

  /// Canonical residue in [0, m).
  std::uint64_t mod_u64(std::uint64_t m) const;

  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
  BigInt pow(unsigned long e) const;

  std::string to_string() const { return v_.get_str(); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Exact quotient; throws InexactDivision when b does not divide a.
  friend BigInt div_exact(const BigInt& a, const BigInt& b);
  /// Truncated quotient and remainder.
  friend BigInt tdiv_q(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ / b.v_)); }
  friend bool divides(const BigInt& d, const BigInt& a);
  friend BigInt gcd(const BigInt& a, const BigInt& b);

  friend std::ostream& operator<<(std::ostream& os, const BigInt& z);

 private:
  mpz_class v_;
};

BigInt div_exact(const BigInt& a, const BigInt& b);
bool divides(const BigInt& d, const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Exact rational number, always reduced with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : v_(BigInt(v).mpz()) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v.mpz()) {}         // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt den() const { return BigInt(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  std::string to_string() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class v_;
};

}  // namespace sepform
