#include "nerontrace/int_poly.hpp"

#include "nerontrace/errors.hpp"

#include <sstream>
#include <utility>

namespace nerontrace {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::one()
{
    return IntPoly{1};
}

IntPoly IntPoly::monomial(std::size_t degree, mpz_class coeff)
{
    if (coeff == 0)
        return IntPoly{};
    std::vector<mpz_class> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::power_minus_one(std::size_t n)
{
    std::vector<mpz_class> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

bool IntPoly::is_monic() const
{
    return !coeffs_.empty() && coeffs_.back() == 1;
}

const mpz_class& IntPoly::coeff(std::size_t k) const
{
    static const mpz_class zero = 0;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

mpz_class IntPoly::eval(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const
{
    IntPoly result(*this);
    for (auto& c : result.coeffs_)
        c = -c;
    return result;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return IntPoly{};
    std::vector<mpz_class> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(prod));
}

IntPoly IntPoly::compose_power(std::size_t m) const
{
    if (m == 0)
        throw Error("compose_power: exponent must be positive");
    if (m == 1 || is_zero())
        return *this;
    std::vector<mpz_class> c((coeffs_.size() - 1) * m + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i * m] = coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::times_power_minus_one(std::size_t n) const
{
    if (n == 0)
        throw Error("times_power_minus_one: n must be positive");
    if (is_zero())
        return IntPoly{};
    std::vector<mpz_class> c(coeffs_.size() + n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        c[i + n] += coeffs_[i];
        c[i] -= coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::div_power_minus_one(std::size_t n) const
{
    // p = q * (T^n - 1) gives p_i = q_{i-n} - q_i, so walking the degree
    // downward: q_{i-n} = p_i + q_i with q_j = 0 outside [0, deg p - n].
    if (n == 0)
        throw Error("div_power_minus_one: n must be positive");
    if (is_zero())
        return IntPoly{};
    if (coeffs_.size() <= n)
        throw InternalInconsistency("div_power_minus_one: degree too small for exact quotient");
    std::vector<mpz_class> q(coeffs_.size() - n);
    for (std::size_t i = coeffs_.size(); i-- > n;) {
        q[i - n] = coeffs_[i];
        if (i < q.size())
            q[i - n] += q[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class rem = coeffs_[i];
        if (i < q.size())
            rem += q[i];
        if (rem != 0)
            throw InternalInconsistency("div_power_minus_one: division not exact");
    }
    return IntPoly(std::move(q));
}

std::string IntPoly::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0)
            out << mag.get_str();
        else if (k == 1)
            out << mag.get_str() << "*T";
        else
            out << mag.get_str() << "*T^" << k;
    }
    return out.str();
}

} // namespace nerontrace
