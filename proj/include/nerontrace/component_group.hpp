#pragma once

#include "nerontrace/fiber.hpp"
#include "nerontrace/monodromy.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace nerontrace {

// Motivic Serre invariant of the abelian variety, reduced mod (L - 1).
// Zero exactly when the toric rank is positive; otherwise the class
// phi_A * [B] with B the abelian quotient of dimension abelian_dim.
class SerreClass {
public:
    static SerreClass zero() { return SerreClass(); }
    static SerreClass additive(mpz_class phi, std::uint64_t abelian_dim);

    bool is_zero() const { return is_zero_; }
    // Component-group order phi_A; only meaningful on an additive class.
    const mpz_class& phi() const { return phi_; }
    std::uint64_t abelian_dim() const { return abelian_dim_; }

    friend bool operator==(const SerreClass&, const SerreClass&) = default;

private:
    SerreClass() = default;
    bool is_zero_ = true;
    mpz_class phi_ = 0;
    std::uint64_t abelian_dim_ = 0;
};

// Poincare polynomial specialization at T = -1: zero on the zero class and
// phi_A * 4^{dim B} on an additive class, hence never zero there.
mpz_class poincare_eval(const SerreClass& s);

// Component-group order prod_i N_i^{d_i - 2} of a purely additive fiber.
// Computed in exact rational arithmetic; a non-integral value signals a
// graph that no relatively minimal model realizes and raises
// NonIntegralResult rather than rounding.
mpz_class phi_additive(const SpecialFiber& fiber, const FiberStats& s);

// Prime-to-p variant prod_i (N'_i)^{d_i - 2}.
mpz_class phi_prime_additive(const SpecialFiber& fiber, const FiberStats& s);

// Euler characteristic of the Neron special fiber: phi_A under purely
// additive reduction, zero otherwise.
mpz_class euler_char_neron(const SpecialFiber& fiber, const FiberStats& s);

// Zero class when the toric rank is positive; otherwise Additive(phi_A, a).
// For toric rank zero with positive abelian rank the component group is not
// determined by the dual graph, so the order must arrive as user input or
// PhiUnavailable is thrown.
SerreClass serre_class(const SpecialFiber& fiber, const FiberStats& s,
                       const std::optional<mpz_class>& user_phi = std::nullopt);

// Exact prime factorization, q -> exponent.
std::map<mpz_class, unsigned> q_primary_decomposition(const mpz_class& n);

// Full verdict record for one fiber.
struct TraceReport {
    FiberStats stats;
    CycloProduct zeta;
    CycloProduct p_phi;
    std::optional<IntPoly> p_phi_poly;
    std::int64_t vanishing_order_at_one = 0;
    std::optional<mpz_class> phi;        // prod N^{d-2}; purely additive fibers only
    std::optional<mpz_class> phi_prime;  // prod N'^{d-2}
    mpz_class euler_char = 0;
    mpz_class trace = 0;
    bool purely_additive = false;
    bool tame_compatible = true;
    std::vector<std::string> tame_violations;
    bool trace_formula_holds = false;
    std::optional<SerreClass> serre;     // absent when phi is needed but unavailable
};

// Assembles stats, P_phi by both routes, the trace value, the Euler
// characteristic of the Neron special fiber and the verdict
// trace_formula_holds = (euler_char == trace).  A mismatch under tame
// compatibility throws InternalInconsistency; without tameness the report
// simply records that the equality is not guaranteed.
TraceReport verify_trace(const SpecialFiber& fiber,
                         const std::optional<mpz_class>& user_phi = std::nullopt);

} // namespace nerontrace
