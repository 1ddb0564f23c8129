#pragma once

#include <cstdint>
#include <vector>

#include "sepform/domains.hpp"
#include "sepform/errors.hpp"

namespace sepform {

/// Polynomial subresultants Sres_i(P, Q) in Y, i = 0..q, with q = deg_Y Q.
///
/// Entries agree with the polynomial determinants of the truncated Sylvester
/// matrices. Entry 0 is the resultant. For deg P > deg Q entry q is
/// b_q^(p-q-1) Q. For deg P == deg Q entry q is b_q^-1 Q; when b_q does not
/// divide Q in the coefficient domain the entry holds Q itself and
/// `top_unnormalized` is set (principal[q] is then still the formal value 1).
template <CoefficientDomain D>
struct SubresultantSequence {
  std::vector<YPoly<D>> sres;
  std::vector<typename D::Elem> principal;
  int p = 0;
  int q = 0;
  bool top_unnormalized = false;

  const YPoly<D>& operator[](std::size_t i) const { return sres[i]; }
  std::size_t size() const { return sres.size(); }
  const YPoly<D>& resultant() const { return sres[0]; }
};

namespace detail {

template <CoefficientDomain D>
void check_pair(const YPoly<D>& P, const YPoly<D>& Q) {
  if (P.empty() || Q.empty()) fail(ErrorCode::InvalidArgument, "subresultants of a zero polynomial");
  if (ydegree<D>(P) < ydegree<D>(Q)) {
    fail(ErrorCode::InvalidArgument, "subresultants need deg_Y(P) >= deg_Y(Q); swap the arguments");
  }
}

template <CoefficientDomain D>
typename D::Elem dpow(const D& dom, const typename D::Elem& a, int e) {
  typename D::Elem r = dom.one();
  for (int i = 0; i < e; ++i) r = dom.mul(r, a);
  return r;
}

}  // namespace detail

/// Subresultant sequence by Ducos' fraction-free remainder sequence. All
/// divisions are exact in D, and defective (degree-gap) steps produce the
/// scaled entries the determinant definition prescribes.
template <CoefficientDomain D>
SubresultantSequence<D> subresultant_sequence(const D& dom, const YPoly<D>& P, const YPoly<D>& Q) {
  detail::check_pair<D>(P, Q);
  SubresultantSequence<D> out;
  const int p = ydegree<D>(P);
  const int q = ydegree<D>(Q);
  out.p = p;
  out.q = q;
  out.sres.assign(static_cast<std::size_t>(q) + 1, YPoly<D>{});
  out.principal.assign(static_cast<std::size_t>(q) + 1, dom.zero());

  const auto bq = Q.back();
  if (p > q) {
    out.sres[q] = yscale(dom, Q, detail::dpow(dom, bq, p - q - 1));
  } else {
    bool exact = true;
    YPoly<D> top;
    for (const auto& c : Q) {
      auto d = dom.try_div(c, bq);
      if (!d) {
        exact = false;
        break;
      }
      top.push_back(std::move(*d));
    }
    out.sres[q] = exact ? std::move(top) : Q;
    out.top_unnormalized = !exact;
  }
  out.principal[q] = out.top_unnormalized ? dom.one() : ycoeff(dom, out.sres[q], static_cast<std::size_t>(q));
  if (q == 0) return out;

  auto s = detail::dpow(dom, bq, p - q);
  YPoly<D> A = Q;
  YPoly<D> B = yprem(dom, P, yneg(dom, Q));
  while (!B.empty()) {
    const int d = ydegree<D>(A);
    const int e = ydegree<D>(B);
    out.sres[static_cast<std::size_t>(d - 1)] = B;
    const int delta = d - e;
    YPoly<D> C;
    if (delta > 1) {
      // C = lc(B)^(delta-1) B / s^(delta-1), one exact step at a time.
      const auto lb = B.back();
      C = B;
      for (int k = 1; k < delta; ++k) C = ydiv_exact(dom, yscale(dom, C, lb), s);
      out.sres[static_cast<std::size_t>(e)] = C;
    } else {
      C = B;
    }
    if (e == 0) break;
    const auto denom = dom.mul(detail::dpow(dom, s, delta), A.back());
    YPoly<D> next = ydiv_exact(dom, yprem(dom, A, yneg(dom, B)), denom);
    ytrim(dom, next);
    A = std::move(C);
    s = A.back();
    B = std::move(next);
  }
  for (int i = 0; i < q; ++i) {
    out.principal[static_cast<std::size_t>(i)] = ycoeff(dom, out.sres[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
  }
  return out;
}

/// Resultant in Y (entry 0 of the sequence), as a domain element.
template <CoefficientDomain D>
typename D::Elem resultant(const D& dom, const YPoly<D>& P, const YPoly<D>& Q) {
  if (ydegree<D>(P) < ydegree<D>(Q)) {
    // Res(P, Q) = (-1)^(pq) Res(Q, P).
    auto r = resultant(dom, Q, P);
    const int pq = ydegree<D>(P) * ydegree<D>(Q);
    return pq % 2 ? dom.neg(r) : r;
  }
  const auto seq = subresultant_sequence(dom, P, Q);
  return ycoeff(dom, seq.resultant(), 0);
}

inline constexpr int kMaxOracleDegree = 6;

/// Sres_i(P, Q) straight from the polynomial determinant of the truncated
/// Sylvester matrix, by cofactor expansion. Desk-scale reference only;
/// throws SizeLimit above kMaxOracleDegree.
template <CoefficientDomain D>
YPoly<D> sylvester_subresultant_oracle(const D& dom, const YPoly<D>& P, const YPoly<D>& Q, int i) {
  detail::check_pair<D>(P, Q);
  const int p = ydegree<D>(P);
  const int q = ydegree<D>(Q);
  if (p > kMaxOracleDegree) fail(ErrorCode::SizeLimit, "determinant oracle limited to degree 6");
  if (i < 0 || i > q || (i == q && p == q)) {
    fail(ErrorCode::InvalidArgument, "determinant oracle index out of range");
  }
  // Rows Y^k P (k = q-i-1..0) then Y^k Q (k = p-i-1..0), in the basis
  // Y^(p+q-i-1), ..., Y^0.
  struct Row {
    const YPoly<D>* poly;
    int shift;
  };
  std::vector<Row> rows;
  for (int k = q - i - 1; k >= 0; --k) rows.push_back({&P, k});
  for (int k = p - i - 1; k >= 0; --k) rows.push_back({&Q, k});
  const int n = static_cast<int>(rows.size());
  const int top = p + q - i - 1;
  auto entry = [&](int r, int power) {
    const int k = power - rows[static_cast<std::size_t>(r)].shift;
    if (k < 0) return dom.zero();
    return ycoeff(dom, *rows[static_cast<std::size_t>(r)].poly, static_cast<std::size_t>(k));
  };
  // Column c (0-based) holds the coefficient of Y^(top - c); the first n-1
  // columns are scalar, the last one is the row polynomial itself.
  // minors[mask] = det(rows in mask, columns 0..|mask|-1), expanded along the
  // last of those columns.
  std::vector<typename D::Elem> minors(std::size_t{1} << n, dom.zero());
  minors[0] = dom.one();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > n - 1) continue;
    typename D::Elem acc = dom.zero();
    int pos = 0;
    for (int r = 0; r < n; ++r) {
      if (!(mask & (1u << r))) continue;
      const auto a = entry(r, top - (k - 1));
      if (!dom.is_zero(a)) {
        auto t = dom.mul(a, minors[mask & ~(1u << r)]);
        // Sign of the cofactor at (pos, k-1) within the k x k minor.
        acc = ((pos + k - 1) % 2) ? dom.sub(acc, t) : dom.add(acc, t);
      }
      ++pos;
    }
    minors[mask] = acc;
  }
  YPoly<D> out;
  const std::uint32_t full = (1u << n) - 1;
  for (int r = 0; r < n; ++r) {
    const auto& minor = minors[full & ~(1u << r)];
    if (dom.is_zero(minor)) continue;
    const auto& row = rows[static_cast<std::size_t>(r)];
    YPoly<D> term(static_cast<std::size_t>(row.shift), dom.zero());
    for (const auto& c : *row.poly) term.push_back(dom.mul(c, minor));
    const bool negate = (r + n - 1) % 2 == 1;
    if (out.size() < term.size()) out.resize(term.size(), dom.zero());
    for (std::size_t k = 0; k < term.size(); ++k) out[k] = negate ? dom.sub(out[k], term[k]) : dom.add(out[k], term[k]);
  }
  ytrim(dom, out);
  return out;
}

}  // namespace sepform
