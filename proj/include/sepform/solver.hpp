#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sepform/mpoly.hpp"

namespace sepform {

/// Pieces of the unlucky-prime bound Xi(d, tau).
struct BoundBreakdown {
  int d = 0;
  int tau = 0;
  double tau_sheared = 0;  // coefficient bitsize of the sheared polynomials
  double tau_resultant = 0;
  double sigma = 0;  // bitsize of a <= 2d^4
  double eval_bits = 0;
  double gcd_primes = 0;
  std::uint64_t small_primes = 0;  // 2d^4
  std::uint64_t xi = 0;
};

/// Rejects d < 2 and tau < 1.
BoundBreakdown unlucky_bound(int d, int tau);

/// 2d^4 with d padded to at least 2.
std::uint64_t small_prime_limit(int d);

enum class PrimeSchedule {
  /// All Xi + 1 candidate primes, as the bound requires.
  Exhaustive,
  /// Candidates in ascending order; stop once `window` consecutive primes
  /// pass the resultant/leading-coefficient filter without raising the
  /// maximum. Not certified.
  EarlyStop,
};

struct LuckyOptions {
  PrimeSchedule schedule = PrimeSchedule::Exhaustive;
  unsigned window = 8;
  unsigned threads = 1;
};

struct LuckyResult {
  std::size_t count = 0;
  std::uint64_t prime = 0;
  /// N_mu for every candidate that passed the filter.
  std::map<std::uint64_t, std::size_t> per_prime;
  /// Candidates rejected by the filter (or by a vanishing sheared resultant).
  std::vector<std::uint64_t> rejected;
  std::size_t primes_tried = 0;
  PrimeSchedule schedule = PrimeSchedule::Exhaustive;
  BoundBreakdown bound;
};

/// Number of distinct complex solutions of P = Q = 0 and a prime achieving
/// it. Throws NotCoprime when P and Q share a factor.
LuckyResult count_and_lucky_prime(const IntPoly& p, const IntPoly& q, const LuckyOptions& opts = {});

/// Exact check over Z: throws NotCoprime if P and Q share a factor.
void check_coprime(const IntPoly& p, const IntPoly& q);

struct FormStep {
  std::uint64_t a = 0;
  bool leading_nonzero = false;  // Upsilon_mu(a) != 0
  int sqfree_degree = -1;        // deg of squarefree R_mu(T, a), when computed
};

struct SeparatingForm {
  std::uint64_t a = 0;
  LuckyResult lucky;
  std::vector<FormStep> steps;
};

/// Smallest a >= 0 such that X + aY separates V(P, Q). Throws
/// NotZeroDimensional when P and Q share a factor.
SeparatingForm separating_form(const IntPoly& p, const IntPoly& q, const LuckyOptions& opts = {});

/// deg of the squarefree part of R(T, a) over Q.
int rational_sqfree_degree(const IntPoly& p, const IntPoly& q, const BigInt& a);

}  // namespace sepform
