#include "sepform/primes.hpp"

#include <array>
#include <cmath>

#include "sepform/errors.hpp"
#include "sepform/rings.hpp"

namespace sepform {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proof for every n < 2^64.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) fail(ErrorCode::InvalidArgument, "first_primes: count must be positive");
  return primes_above(0, count);
}

std::vector<std::uint64_t> primes_above(std::uint64_t bound, std::size_t count) {
  if (count == 0) fail(ErrorCode::InvalidArgument, "primes_above: count must be positive");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (bound < 2) {
    out.push_back(2);
    bound = 2;
  }
  // Odd candidates only from here on.
  std::uint64_t n = bound + 1;
  if (n % 2 == 0) ++n;
  while (out.size() < count) {
    if (n >= kMaxWordModulus) {
      fail(ErrorCode::Overflow, "primes_above: candidate primes exceed the word-sized modulus limit");
    }
    if (is_prime_u64(n)) out.push_back(n);
    n += 2;
  }
  return out;
}

namespace {

// Level 0 holds the primes themselves; each level above multiplies pairs.
std::vector<std::vector<mpz_class>> product_tree(std::span<const std::uint64_t> primes) {
  std::vector<std::vector<mpz_class>> levels;
  std::vector<mpz_class> base;
  base.reserve(primes.size());
  for (std::uint64_t p : primes) base.push_back(BigInt(static_cast<std::int64_t>(p)).mpz());
  levels.push_back(std::move(base));
  while (levels.back().size() > 1) {
    const auto& prev = levels.back();
    std::vector<mpz_class> next;
    next.reserve((prev.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < prev.size(); i += 2) next.push_back(prev[i] * prev[i + 1]);
    if (prev.size() % 2 == 1) next.push_back(prev.back());
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

ResidueTable batch_mod_reduce(std::span<const BigInt> values, std::span<const std::uint64_t> primes) {
  if (primes.empty()) fail(ErrorCode::InvalidArgument, "batch_mod_reduce: no primes");
  for (std::uint64_t p : primes) {
    if (p < 2) fail(ErrorCode::InvalidArgument, "batch_mod_reduce: modulus below 2");
    if (p >= kMaxWordModulus) fail(ErrorCode::Overflow, "batch_mod_reduce: modulus exceeds word size");
  }
  const auto tree = product_tree(primes);
  ResidueTable out(values.size(), std::vector<std::uint64_t>(primes.size()));
  std::vector<mpz_class> cur;
  std::vector<mpz_class> next;
  for (std::size_t i = 0; i < values.size(); ++i) {
    cur.assign(1, mpz_class());
    mpz_fdiv_r(cur[0].get_mpz_t(), values[i].mpz().get_mpz_t(), tree.back()[0].get_mpz_t());
    for (std::size_t lvl = tree.size() - 1; lvl-- > 0;) {
      const auto& nodes = tree[lvl];
      next.assign(nodes.size(), mpz_class());
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        mpz_fdiv_r(next[k].get_mpz_t(), cur[k / 2].get_mpz_t(), nodes[k].get_mpz_t());
      }
      std::swap(cur, next);
    }
    for (std::size_t j = 0; j < primes.size(); ++j) out[i][j] = BigInt(cur[j]).mod_u64(primes[j]);
  }
  return out;
}

ResidueTable naive_mod_reduce(std::span<const BigInt> values, std::span<const std::uint64_t> primes) {
  if (primes.empty()) fail(ErrorCode::InvalidArgument, "naive_mod_reduce: no primes");
  ResidueTable out(values.size(), std::vector<std::uint64_t>(primes.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (primes[j] < 2) fail(ErrorCode::InvalidArgument, "naive_mod_reduce: modulus below 2");
      out[i][j] = values[i].mod_u64(primes[j]);
    }
  }
  return out;
}

}  // namespace sepform
