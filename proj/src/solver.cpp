#include "sepform/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "sepform/counting.hpp"
#include "sepform/primes.hpp"
#include "sepform/shear.hpp"

namespace sepform {

namespace {

double lg(double x) { return std::log2(x); }

struct PrimeOutcome {
  bool passed = false;
  std::size_t count = 0;
};

/// Coefficients of P, Q, L_P, L_Q flattened once, so that every prime only
/// needs a residue table row.
struct ReductionPlan {
  const IntPoly* p;
  const IntPoly* q;
  std::vector<BigInt> values;
  std::size_t p_terms = 0;
  std::size_t q_terms = 0;
  std::size_t lp_size = 0;
  std::size_t lq_size = 0;

  ReductionPlan(const IntPoly& pp, const IntPoly& qq, const UPoly<IntegerRing>& lp, const UPoly<IntegerRing>& lq)
      : p(&pp), q(&qq) {
    for (const auto& [e, c] : pp.terms()) values.push_back(c);
    for (const auto& [e, c] : qq.terms()) values.push_back(c);
    p_terms = pp.num_terms();
    q_terms = qq.num_terms();
    for (const auto& c : lp.coeffs()) values.push_back(c);
    for (const auto& c : lq.coeffs()) values.push_back(c);
    lp_size = lp.coeffs().size();
    lq_size = lq.coeffs().size();
  }

  ModPoly rebuild(const IntPoly& f, const PrimeField& field, const std::vector<std::uint64_t>& col, std::size_t offset) const {
    ModPoly out(field, f.vars());
    std::size_t k = offset;
    for (const auto& [e, c] : f.terms()) out.add_term(e, col[k++]);
    return out;
  }

  UPoly<PrimeField> rebuild_univar(const PrimeField& field, const std::vector<std::uint64_t>& col, std::size_t offset,
                                   std::size_t n) const {
    return UPoly<PrimeField>(field, std::vector<std::uint64_t>(col.begin() + static_cast<std::ptrdiff_t>(offset),
                                                               col.begin() + static_cast<std::ptrdiff_t>(offset + n)));
  }
};

PrimeOutcome evaluate_prime(const ReductionPlan& plan, std::uint64_t mu, const std::vector<std::uint64_t>& col) {
  const PrimeField field(mu);
  const ModPoly pm = plan.rebuild(*plan.p, field, col, 0);
  const ModPoly qm = plan.rebuild(*plan.q, field, col, plan.p_terms);
  const auto lp = plan.rebuild_univar(field, col, plan.p_terms + plan.q_terms, plan.lp_size);
  const auto lq = plan.rebuild_univar(field, col, plan.p_terms + plan.q_terms + plan.lp_size, plan.lq_size);
  if (pm.is_zero() || qm.is_zero() || lp.is_zero() || lq.is_zero()) return {};
  if (resultant_y(pm, qm).is_zero()) return {};
  try {
    return {true, count_distinct_mod(pm, qm).count};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCoprime) return {};
    throw;
  }
}

/// Outcomes for a block of primes, computed on up to `threads` workers.
std::vector<PrimeOutcome> evaluate_block(const ReductionPlan& plan, const std::vector<std::uint64_t>& primes, unsigned threads) {
  const ResidueTable table = batch_mod_reduce(plan.values, primes);
  std::vector<std::vector<std::uint64_t>> cols(primes.size(), std::vector<std::uint64_t>(plan.values.size()));
  for (std::size_t i = 0; i < plan.values.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) cols[j][i] = table[i][j];
  }
  std::vector<PrimeOutcome> out(primes.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  if (workers == 1) {
    for (std::size_t j = 0; j < primes.size(); ++j) out[j] = evaluate_prime(plan, primes[j], cols[j]);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t j = w; j < primes.size(); j += workers) out[j] = evaluate_prime(plan, primes[j], cols[j]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

int padded_degree(int d) { return std::max(d, 2); }

int padded_tau(std::size_t tau) { return static_cast<int>(std::max<std::size_t>(tau, 1)); }

}  // namespace

BoundBreakdown unlucky_bound(int d, int tau) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "unlucky_bound needs d >= 2");
  if (tau < 1) fail(ErrorCode::InvalidArgument, "unlucky_bound needs tau >= 1");
  BoundBreakdown b;
  b.d = d;
  b.tau = tau;
  const double dd = d;
  b.tau_sheared = sheared_bitsize_bound(d, tau);
  {
    const double dp = 2 * dd;
    b.tau_resultant = 2 * dp * (b.tau_sheared + std::floor(lg(2 * dp)) + 1) + 2 * (std::floor(lg(2 * dp * dp + 1)) + 1);
  }
  b.sigma = 4 * lg(dd) + 2;
  const double dp = 2 * dd * dd;
  b.eval_bits = dp * b.sigma + b.tau_resultant + lg(dp + 1) + 1;
  const double tau_deriv = b.tau_resultant + 1 + std::ceil(lg(dp));
  b.gcd_primes = (dp + 1) * (2 * tau_deriv + lg(dp + 1)) + 1;
  b.small_primes = small_prime_limit(d);
  b.xi = static_cast<std::uint64_t>(std::ceil(3 * b.eval_bits + b.gcd_primes)) + b.small_primes;
  return b;
}

std::uint64_t small_prime_limit(int d) {
  const auto dd = static_cast<std::uint64_t>(padded_degree(d));
  return 2 * dd * dd * dd * dd;
}

void check_coprime(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::NotCoprime, "a zero polynomial shares every factor");
  const auto lp = shear_leading_coeff(p);
  const auto lq = shear_leading_coeff(q);
  for (std::int64_t a = 0;; ++a) {
    const BigInt av(a);
    if (lp.eval(av).is_zero() || lq.eval(av).is_zero()) continue;
    if (specialized_resultant(p, q, av).is_zero()) fail(ErrorCode::NotCoprime, "P and Q share a non-constant factor");
    return;
  }
}

LuckyResult count_and_lucky_prime(const IntPoly& p, const IntPoly& q, const LuckyOptions& opts) {
  check_coprime(p, q);
  const int d = system_degree(p, q);
  const std::size_t tau = std::max(bitsize(p), bitsize(q));
  LuckyResult res;
  res.schedule = opts.schedule;
  res.bound = unlucky_bound(padded_degree(d), padded_tau(tau));
  const std::uint64_t candidates = res.bound.xi + 1;
  const ReductionPlan plan(p, q, shear_leading_coeff(p), shear_leading_coeff(q));

  const std::size_t block = opts.schedule == PrimeSchedule::Exhaustive
                                ? 512
                                : std::max<std::size_t>(std::max(opts.window, 1u), opts.threads);
  std::optional<std::size_t> best;
  unsigned since_raise = 0;
  std::uint64_t last = res.bound.small_primes;
  bool done = false;
  while (!done && res.primes_tried < candidates) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(block, candidates - res.primes_tried));
    const auto primes = primes_above(last, n);
    last = primes.back();
    const auto outcomes = evaluate_block(plan, primes, opts.threads);
    for (std::size_t j = 0; j < primes.size(); ++j) {
      ++res.primes_tried;
      if (!outcomes[j].passed) {
        res.rejected.push_back(primes[j]);
        continue;
      }
      res.per_prime[primes[j]] = outcomes[j].count;
      if (!best || outcomes[j].count > *best) {
        best = outcomes[j].count;
        res.prime = primes[j];
        since_raise = 0;
      } else if (++since_raise >= opts.window && opts.schedule == PrimeSchedule::EarlyStop) {
        done = true;
        break;
      }
    }
  }
  if (!best) fail(ErrorCode::BoundExceeded, "no candidate prime passed the resultant test");
  res.count = *best;
  return res;
}

SeparatingForm separating_form(const IntPoly& p, const IntPoly& q, const LuckyOptions& opts) {
  SeparatingForm out;
  try {
    out.lucky = count_and_lucky_prime(p, q, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCoprime) fail(ErrorCode::NotZeroDimensional, e.what());
    throw;
  }
  const PrimeField field(out.lucky.prime);
  const ModPoly pm = reduce_mod_prime(p, field);
  const ModPoly qm = reduce_mod_prime(q, field);
  const auto lp = shear_leading_coeff(pm);
  const auto lq = shear_leading_coeff(qm);
  const std::uint64_t limit = small_prime_limit(system_degree(p, q));
  for (std::uint64_t a = 0; a < limit; ++a) {
    FormStep step;
    step.a = a;
    const auto av = field.from_int(static_cast<std::int64_t>(a));
    step.leading_nonzero = !field.is_zero(field.mul(lp.eval(av), lq.eval(av)));
    if (step.leading_nonzero) {
      const auto r = specialized_resultant(pm, qm, av);
      if (!r.is_zero()) step.sqfree_degree = squarefree_part(r).degree();
    }
    out.steps.push_back(step);
    if (step.sqfree_degree >= 0 && static_cast<std::size_t>(step.sqfree_degree) == out.lucky.count) {
      out.a = a;
      return out;
    }
  }
  fail(ErrorCode::BoundExceeded, "no separating form with a < 2d^4 for the chosen prime");
}

int rational_sqfree_degree(const IntPoly& p, const IntPoly& q, const BigInt& a) {
  const auto r = specialized_resultant(p, q, a);
  if (r.is_zero()) return kZeroPolyDegree;
  return squarefree_part(r).degree();
}

}  // namespace sepform
