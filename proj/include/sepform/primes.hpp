#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sepform/bigint.hpp"

namespace sepform {

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// The `count` smallest primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// The `count` smallest primes strictly greater than `bound`, ascending.
/// Throws Overflow if a prime would reach kMaxWordModulus.
std::vector<std::uint64_t> primes_above(std::uint64_t bound, std::size_t count);

using ResidueTable = std::vector<std::vector<std::uint64_t>>;

/// residues[i][j] = values[i] mod primes[j], computed with a remainder tree
/// over the product tree of `primes`.
ResidueTable batch_mod_reduce(std::span<const BigInt> values, std::span<const std::uint64_t> primes);

/// Per-pair reduction. Reference for batch_mod_reduce.
ResidueTable naive_mod_reduce(std::span<const BigInt> values, std::span<const std::uint64_t> primes);

}  // namespace sepform
