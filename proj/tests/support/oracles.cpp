#include "support/oracles.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using nerontrace::IntMatrix;
using nerontrace::IntPoly;

IntPoly divide(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::runtime_error("oracle: division by zero polynomial");
    if (num.is_zero()) return IntPoly();
    const long dn = den.degree();
    const long dq = num.degree() - dn;
    if (dq < 0) throw std::runtime_error("oracle: numerator degree too small");
    const mpz_class& lead = den.coeff(static_cast<std::size_t>(dn));

    std::vector<mpz_class> rem = num.coeffs();
    std::vector<mpz_class> quot(static_cast<std::size_t>(dq) + 1);
    for (long k = dq; k >= 0; --k) {
        mpz_class c = rem[static_cast<std::size_t>(k + dn)];
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw std::runtime_error("oracle: leading coefficient does not divide");
        c /= lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            for (long i = 0; i <= dn; ++i)
                rem[static_cast<std::size_t>(k + i)] -= c * den.coeff(static_cast<std::size_t>(i));
    }
    for (const mpz_class& r : rem)
        if (r != 0) throw std::runtime_error("oracle: division not exact");
    return IntPoly(std::move(quot));
}

IntPoly cyclotomic(std::uint64_t d) {
    static std::map<std::uint64_t, IntPoly> cache;
    auto hit = cache.find(d);
    if (hit != cache.end()) return hit->second;

    IntPoly value = IntPoly::power_minus_one(static_cast<std::size_t>(d));
    for (std::uint64_t e = 1; e < d; ++e)
        if (d % e == 0) value = divide(value, cyclotomic(e));
    cache.emplace(d, value);
    return value;
}

mpz_class det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::uint64_t coprime_residue_char(const nerontrace::SpecialFiber& fiber) {
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        bool coprime = true;
        for (const nerontrace::Component& c : fiber.components())
            if (c.multiplicity % q == 0) coprime = false;
        if (coprime) return q;
    }
    throw std::runtime_error("oracle: no small coprime residue characteristic");
}

} // namespace oracle
