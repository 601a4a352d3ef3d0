#include "nerontrace/arith.hpp"

#include <algorithm>

namespace nerontrace {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2) ? 1 : 2) {
        if (n % q)
            continue;
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        factors.emplace_back(q, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    return factors;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> divs{1};
    for (const auto& [q, e] : factorize(n)) {
        const std::size_t count = divs.size();
        std::uint64_t power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= q;
            for (std::size_t j = 0; j < count; ++j)
                divs.push_back(divs[j] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t radical(std::uint64_t n)
{
    std::uint64_t rad = 1;
    for (const auto& [q, e] : factorize(n))
        rad *= q;
    return rad;
}

std::uint64_t prime_power_base(std::uint64_t n)
{
    auto factors = factorize(n);
    return factors.size() == 1 ? factors[0].first : 0;
}

} // namespace nerontrace
