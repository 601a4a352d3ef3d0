#include "nerontrace/cyclo.hpp"

#include "nerontrace/arith.hpp"
#include "nerontrace/errors.hpp"

#include <bit>
#include <mutex>
#include <sstream>

namespace nerontrace {

namespace {

// Moebius product over the squarefree divisors of the radical r of d:
//   Phi_r = prod_{e | r} (T^{r/e} - 1)^{mu(e)}
// then Phi_d(T) = Phi_r(T^{d/r}).  All divisions are exact divisions by
// binomials, so the whole computation stays in Z[T].
IntPoly cyclotomic_uncached(std::uint64_t d)
{
    if (d == 1)
        return IntPoly{-1, 1};
    std::vector<std::uint64_t> primes;
    for (const auto& [q, e] : factorize(d))
        primes.push_back(q);
    std::uint64_t rad = 1;
    for (std::uint64_t q : primes)
        rad *= q;

    std::vector<std::uint64_t> numerators, denominators;
    for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1u << i))
                e *= primes[i];
        if (std::popcount(mask) % 2 == 0)
            numerators.push_back(rad / e);
        else
            denominators.push_back(rad / e);
    }

    IntPoly poly = IntPoly::one();
    for (std::uint64_t n : numerators)
        poly = poly.times_power_minus_one(n);
    for (std::uint64_t n : denominators)
        poly = poly.div_power_minus_one(n);
    return poly.compose_power(d / rad);
}

} // namespace

IntPoly cyclotomic(std::uint64_t d)
{
    if (d == 0)
        throw Error("cyclotomic: index must be positive");
    static std::mutex cache_mutex;
    static std::map<std::uint64_t, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end())
            return it->second;
    }
    IntPoly value = cyclotomic_uncached(d);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(d, std::move(value)).first->second;
}

std::uint64_t cyclotomic_value_at_one(std::uint64_t d)
{
    if (d < 2)
        throw Error("cyclotomic_value_at_one: defined for d >= 2 only");
    std::uint64_t q = prime_power_base(d);
    return q ? q : 1;
}

CycloProduct::CycloProduct(Map exponents) : exponents_(std::move(exponents))
{
    for (auto it = exponents_.begin(); it != exponents_.end();) {
        if (it->first == 0)
            throw Error("CycloProduct: index must be positive");
        it = it->second == 0 ? exponents_.erase(it) : std::next(it);
    }
}

std::int64_t CycloProduct::exponent(std::uint64_t d) const
{
    auto it = exponents_.find(d);
    return it == exponents_.end() ? 0 : it->second;
}

CycloProduct& CycloProduct::mul_phi(std::uint64_t d, std::int64_t e)
{
    if (d == 0)
        throw Error("CycloProduct: index must be positive");
    auto it = exponents_.find(d);
    if (it == exponents_.end()) {
        if (e != 0)
            exponents_.emplace(d, e);
    } else {
        it->second += e;
        if (it->second == 0)
            exponents_.erase(it);
    }
    return *this;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& rhs)
{
    for (const auto& [d, e] : rhs.exponents_)
        mul_phi(d, e);
    return *this;
}

IntPoly CycloProduct::expand() const
{
    IntPoly result = IntPoly::one();
    for (const auto& [d, e] : exponents_) {
        if (e < 0)
            throw NegativeExponent("expand: Phi_" + std::to_string(d) + " has exponent " + std::to_string(e));
        const IntPoly phi = cyclotomic(d);
        for (std::int64_t i = 0; i < e; ++i)
            result = result * phi;
    }
    return result;
}

EvalAtOne CycloProduct::eval_at_one() const
{
    EvalAtOne result;
    mpz_class num = 1, den = 1;
    for (const auto& [d, e] : exponents_) {
        if (d == 1) {
            result.order = e;
            continue;
        }
        std::uint64_t v = cyclotomic_value_at_one(d);
        if (v == 1)
            continue;
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), v, static_cast<unsigned long>(e < 0 ? -e : e));
        (e > 0 ? num : den) *= power;
    }
    result.value = mpq_class(num, den);
    result.value.canonicalize();
    return result;
}

std::string CycloProduct::str() const
{
    if (exponents_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, e] : exponents_) {
        if (!first)
            out << " * ";
        out << "Phi_" << d << "^" << e;
        first = false;
    }
    return out.str();
}

CycloProduct binomial_product(const BinomialFactors& factors)
{
    CycloProduct product;
    for (const auto& [n, e] : factors) {
        if (n == 0)
            throw Error("binomial_product: N must be positive");
        for (std::uint64_t d : divisors(n))
            product.mul_phi(d, e);
    }
    return product;
}

BinomialFactors substitute_power_factors(const BinomialFactors& factors, std::uint64_t m)
{
    if (m == 0)
        throw Error("substitute_power: m must be positive");
    BinomialFactors scaled;
    for (const auto& [n, e] : factors) {
        if (e != 0)
            scaled[n * m] += e;
    }
    return scaled;
}

CycloProduct substitute_power(const BinomialFactors& factors, std::uint64_t m)
{
    return binomial_product(substitute_power_factors(factors, m));
}

std::string binomial_factors_str(const BinomialFactors& factors)
{
    if (factors.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (!first)
            out << " * ";
        if (it->first == 1)
            out << "(T - 1)^" << it->second;
        else
            out << "(T^" << it->first << " - 1)^" << it->second;
        first = false;
    }
    return out.str();
}

} // namespace nerontrace
