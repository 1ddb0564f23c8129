#include "sepform/bigint.hpp"

#include <climits>
#include <ostream>

#include "sepform/errors.hpp"

namespace sepform {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::InexactDivision: return "inexact_division";
    case ErrorCode::NotInvertible: return "not_invertible";
    case ErrorCode::Inseparable: return "inseparable";
    case ErrorCode::LeadingCoefficientsNotCoprime: return "leading_coefficients_not_coprime";
    case ErrorCode::NotCoprime: return "not_coprime";
    case ErrorCode::NotZeroDimensional: return "not_zero_dimensional";
    case ErrorCode::SizeLimit: return "size_limit";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::BoundExceeded: return "bound_exceeded";
  }
  return "unknown";
}

BigInt::BigInt(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through the
  // magnitude to handle INT64_MIN.
  const bool neg = v < 0;
  const std::uint64_t mag = neg ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  mpz_import(v_.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (neg) v_ = -v_;
}

BigInt BigInt::from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError(1, 1, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError(1, 1, "sign without digits");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError(1, i + 1, "invalid digit in integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(mpz_class(s, 10));
}

bool BigInt::fits_int64() const {
  return bitsize() <= 63 || (sign() < 0 && *this == BigInt(INT64_MIN));
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) fail(ErrorCode::Overflow, "integer does not fit in 64 bits");
  std::uint64_t mag = 0;
  std::size_t count = 0;
  mpz_export(&mag, &count, 1, sizeof(mag), 0, 0, v_.get_mpz_t());
  return sign() < 0 ? static_cast<std::int64_t>(~mag + 1) : static_cast<std::int64_t>(mag);
}

std::size_t BigInt::bitsize() const {
  if (is_zero()) return 1;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  if (m == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (m <= ULONG_MAX) {
    // mpz_fdiv_ui returns the nonnegative remainder for a positive divisor.
    return mpz_fdiv_ui(v_.get_mpz_t(), static_cast<unsigned long>(m));
  }
  mpz_class r;
  mpz_class mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

BigInt BigInt::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return BigInt(std::move(r));
}

BigInt div_exact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) fail(ErrorCode::InexactDivision, "division by zero");
  if (!mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t())) {
    fail(ErrorCode::InexactDivision, a.to_string() + " is not divisible by " + b.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(q));
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(std::move(g));
}

std::ostream& operator<<(std::ostream& os, const BigInt& z) { return os << z.v_.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) fail(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "division by zero rational");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.v_.get_str(); }

}  // namespace sepform
