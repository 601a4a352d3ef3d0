#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace nerontrace {

// Dense univariate polynomial over Z.  coeffs()[k] is the coefficient of
// T^k; the vector never carries a trailing zero, so the zero polynomial is
// the empty vector.  Immutable value type apart from compound assignment.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly one();
    static IntPoly monomial(std::size_t degree, mpz_class coeff = 1);
    // T^n - 1
    static IntPoly power_minus_one(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_monic() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    // Coefficient of T^k, zero beyond the degree.
    const mpz_class& coeff(std::size_t k) const;

    mpz_class eval(const mpz_class& x) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

    // p(T^m): spreads coefficients m slots apart.
    IntPoly compose_power(std::size_t m) const;
    // Multiply by T^n - 1 in O(deg) coefficient operations.
    IntPoly times_power_minus_one(std::size_t n) const;
    // Exact division by T^n - 1.  The quotient must be exact; a nonzero
    // remainder throws InternalInconsistency.
    IntPoly div_power_minus_one(std::size_t n) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // Lowest degree first with explicit coefficients: "1 - 2*T + 1*T^2".
    std::string str() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

} // namespace nerontrace
