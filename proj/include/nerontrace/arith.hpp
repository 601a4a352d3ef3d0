#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nerontrace {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime factorization by trial division, factors in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// All positive divisors of n, sorted increasingly.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Product of the distinct prime factors; radical(1) = 1.
std::uint64_t radical(std::uint64_t n);

// If n = q^k for a prime q and k >= 1, returns q; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

} // namespace nerontrace
