#pragma once

#include "nerontrace/int_poly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace nerontrace {

// The d-th cyclotomic polynomial Phi_d, d >= 1.  Computed by exact
// divisions over the divisor lattice of d and memoized per process; the
// cache is safe for concurrent callers.
IntPoly cyclotomic(std::uint64_t d);

// Phi_d(1) for d >= 2 by the closed law: q when d is a prime power q^k,
// otherwise 1.  Validated against expansion in the test suite.
std::uint64_t cyclotomic_value_at_one(std::uint64_t d);

// Formal product prod_N (T^N - 1)^{e_N} with integer exponents, keyed by N.
// Inputs to the monodromy formulas arrive in this shape.
using BinomialFactors = std::map<std::uint64_t, std::int64_t>;

// Order of vanishing at T=1 together with the value of the nonvanishing
// part.  A negative order is a pole.
struct EvalAtOne {
    std::int64_t order = 0;
    mpq_class value = 1;

    friend bool operator==(const EvalAtOne&, const EvalAtOne&) = default;
};

// Formal product prod_d Phi_d(T)^{e_d}.  Canonical form: no zero exponent
// is stored and keys are sorted, so structural equality is mathematical
// equality.  Immutable value semantics; multiplication adds exponent maps.
class CycloProduct {
public:
    using Map = std::map<std::uint64_t, std::int64_t>;

    CycloProduct() = default;
    explicit CycloProduct(Map exponents);

    static CycloProduct one() { return CycloProduct{}; }

    const Map& exponents() const { return exponents_; }
    bool is_one() const { return exponents_.empty(); }
    // Exponent of Phi_d, zero when absent.
    std::int64_t exponent(std::uint64_t d) const;

    // Multiply by Phi_d^e.
    CycloProduct& mul_phi(std::uint64_t d, std::int64_t e);
    CycloProduct& operator*=(const CycloProduct& rhs);
    friend CycloProduct operator*(CycloProduct lhs, const CycloProduct& rhs) { return lhs *= rhs; }

    // Expanded integer polynomial; requires every exponent >= 0, else
    // throws NegativeExponent.
    IntPoly expand() const;

    // Order of vanishing at T=1 (the Phi_1 exponent) and the exact value
    // prod_{d>1} Phi_d(1)^{e_d} of the remaining factors.
    EvalAtOne eval_at_one() const;

    friend bool operator==(const CycloProduct&, const CycloProduct&) = default;

    // "Phi_1^-2 * Phi_2^2"; the empty product prints as "1".
    std::string str() const;

private:
    Map exponents_;
};

// Splits each (T^N - 1)^e into prod_{d | N} Phi_d^e and merges the lot.
CycloProduct binomial_product(const BinomialFactors& factors);

// T -> T^m on binomial factors: (T^N - 1)^e becomes (T^{Nm} - 1)^e.
BinomialFactors substitute_power_factors(const BinomialFactors& factors, std::uint64_t m);

// Same substitution, renormalized to cyclotomic form.
CycloProduct substitute_power(const BinomialFactors& factors, std::uint64_t m);

// "(T^2 - 1)^2 * (T - 1)^-4", highest N first; empty product prints "1".
std::string binomial_factors_str(const BinomialFactors& factors);

} // namespace nerontrace
