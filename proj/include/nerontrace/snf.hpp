#pragma once

#include "nerontrace/fiber.hpp"
#include "nerontrace/int_poly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace nerontrace {

// Square integer matrix; the only linear algebra the oracle needs.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<mpz_class> entries_;
};

// Invariant factors d_1 | d_2 | ... | d_n >= 0 of m under unimodular row and
// column operations.  Canonical: all entries nonnegative, zeros trailing.
std::vector<mpz_class> smith_normal_form(IntMatrix m);

// Order of coker(m) = prod d_i, which equals |det m|; nullopt when the
// cokernel is infinite (det m = 0).
std::optional<mpz_class> coker_order(const IntMatrix& m);

// Companion matrix of a monic polynomial of degree >= 1: ones on the
// subdiagonal, negated coefficients in the last column.  Its characteristic
// polynomial is p, which is all the oracle relies on.
IntMatrix companion(const IntPoly& p);

// One prime's worth of the q-part comparison.
struct QPartPrimeRow {
    mpz_class q;
    unsigned coker_valuation = 0;
    unsigned phi_valuation = 0;
    bool agree = false;
};

// Result of check_q_part_identity.
struct QPartReport {
    bool degenerate = false;                 // P_phi constant; vacuous check
    std::vector<mpz_class> invariant_factors;
    std::optional<mpz_class> coker;          // order of coker(Id - C); nullopt = infinite
    mpz_class phi_prime = 0;
    std::vector<QPartPrimeRow> primes;       // primes q != p dividing either side
    bool ok = false;
};

// Independent check that the component-group order of a purely additive
// fiber matches the cokernel order of Id - C for C a companion matrix of
// P_phi.  The two sides come from disjoint code paths: a multiplicity
// product on one, Smith reduction on the other.  Throws NotPurelyAdditive
// when the fiber has positive abelian or toric rank.
QPartReport check_q_part_identity(const SpecialFiber& fiber);

} // namespace nerontrace
