#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace solcon {

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors in ascending order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Exponent of the prime `p` in `n` (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// True iff `p` is a prime of the form 2^k - 1.
bool is_mersenne_prime(std::uint64_t p);

/// lcm that throws ResourceError on 64-bit overflow.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

/// (p, e) with q = p^e, p prime; nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace solcon
