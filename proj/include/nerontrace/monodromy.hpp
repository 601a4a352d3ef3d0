#pragma once

#include "nerontrace/cyclo.hpp"
#include "nerontrace/fiber.hpp"
#include "nerontrace/int_poly.hpp"

#include <gmpxx.h>

#include <optional>

namespace nerontrace {

// Binomial factors (T^{N'_i} - 1)^{-chi_i} of the reciprocal monodromy
// zeta function, merged over the components.
BinomialFactors zeta_factors(const SpecialFiber& fiber, const FiberStats& s);

// Reciprocal monodromy zeta function as a cyclotomic product.
CycloProduct zeta(const SpecialFiber& fiber);

// Tame variant using the full multiplicities N_i in place of N'_i.  Valid
// under cohomological tameness plus the hypothesis that either the
// multiplicity gcd is prime to p or the curve genus differs from 1; the
// genus is not derivable from the dual graph, so the caller asserts the
// hypothesis explicitly.  Throws HypothesisNotAsserted when the flag is
// unset and TamenessViolation when tame_compatibility reports violations.
BinomialFactors zeta_tame_factors(const SpecialFiber& fiber, const FiberStats& s,
                                  bool caller_asserts_tame_and_hypothesis);
CycloProduct zeta_tame(const SpecialFiber& fiber, bool caller_asserts_tame_and_hypothesis);

// Characteristic polynomial of tame monodromy on H^1, as (T-1)^2 times the
// reciprocal zeta function.
CycloProduct p_phi_via_zeta(const SpecialFiber& fiber);

// Same polynomial assembled from
//   (T-1)^{2a+2t} * prod_i ((T^{N'_i}-1)/(T-1))^{2 g_i + d_i - 2}.
CycloProduct p_phi_lorenzini(const SpecialFiber& fiber);

// P_phi(1): zero when the product vanishes at 1, otherwise the exact
// integer value.  Throws PoleAtOne on a negative Phi_1 exponent and
// NonIntegralResult when the value is a proper rational (the graph cannot
// come from a minimal model).
mpz_class trace_value(const CycloProduct& p_phi);

struct MonodromyResult {
    CycloProduct zeta;
    CycloProduct p_phi;
    std::optional<IntPoly> p_phi_poly;  // expansion, when all exponents permit
    std::int64_t vanishing_order_at_one = 0;
    mpz_class trace_value = 0;
};

// Runs both P_phi routes and insists on structural agreement; throws
// InternalInconsistency if they ever differ.
MonodromyResult monodromy(const SpecialFiber& fiber);

} // namespace nerontrace
