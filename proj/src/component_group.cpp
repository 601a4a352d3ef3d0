#include "nerontrace/component_group.hpp"

#include "nerontrace/errors.hpp"

namespace nerontrace {

SerreClass SerreClass::additive(mpz_class phi, std::uint64_t abelian_dim)
{
    if (phi <= 0)
        throw Error("SerreClass: phi_A must be a positive integer");
    SerreClass s;
    s.is_zero_ = false;
    s.phi_ = std::move(phi);
    s.abelian_dim_ = abelian_dim;
    return s;
}

mpz_class poincare_eval(const SerreClass& s)
{
    if (s.is_zero())
        return 0;
    mpz_class four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(s.abelian_dim()));
    return s.phi() * four_pow;
}

namespace {

mpz_class degree_weighted_product(const std::vector<std::uint64_t>& mults, const FiberStats& s,
                                  const char* what)
{
    if (!is_purely_additive(s))
        throw NotPurelyAdditive("component-group product formula requires abelian and toric rank zero");
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        const std::int64_t e = static_cast<std::int64_t>(s.edge_degree[i]) - 2;
        if (e == 0 || mults[i] == 1)
            continue;
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), mults[i], static_cast<unsigned long>(e < 0 ? -e : e));
        (e > 0 ? num : den) *= power;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw NonIntegralResult(std::string(what) + " = " + mpq_class(num, den).get_str() +
                                " is not an integer; graph not realizable as a minimal fiber");
    return num / den;
}

} // namespace

mpz_class phi_additive(const SpecialFiber& fiber, const FiberStats& s)
{
    std::vector<std::uint64_t> mults;
    mults.reserve(fiber.size());
    for (const Component& c : fiber.components())
        mults.push_back(c.multiplicity);
    return degree_weighted_product(mults, s, "phi_A");
}

mpz_class phi_prime_additive(const SpecialFiber& fiber, const FiberStats& s)
{
    return degree_weighted_product(s.prime_to_p_multiplicity, s, "phi'_A");
}

mpz_class euler_char_neron(const SpecialFiber& fiber, const FiberStats& s)
{
    return is_purely_additive(s) ? phi_additive(fiber, s) : mpz_class(0);
}

SerreClass serre_class(const SpecialFiber& fiber, const FiberStats& s,
                       const std::optional<mpz_class>& user_phi)
{
    if (s.toric_rank > 0)
        return SerreClass::zero();
    if (s.abelian_rank == 0)
        return SerreClass::additive(phi_additive(fiber, s), 0);
    if (user_phi)
        return SerreClass::additive(*user_phi, s.abelian_rank);
    throw PhiUnavailable("toric rank 0 with abelian rank > 0: no product formula for phi_A; "
                         "supply it explicitly");
}

std::map<mpz_class, unsigned> q_primary_decomposition(const mpz_class& n)
{
    if (n <= 0)
        throw Error("q_primary_decomposition: n must be positive");
    std::map<mpz_class, unsigned> factors;
    mpz_class rest = n;
    for (mpz_class q = 2; q * q <= rest; q += (q == 2) ? 1 : 2) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
            rest /= q;
            ++e;
        }
        if (e)
            factors.emplace(q, e);
    }
    if (rest > 1)
        factors.emplace(rest, 1);
    return factors;
}

TraceReport verify_trace(const SpecialFiber& fiber, const std::optional<mpz_class>& user_phi)
{
    TraceReport report;
    report.stats = stats(fiber);
    const MonodromyResult mono = monodromy(fiber);
    report.zeta = mono.zeta;
    report.p_phi = mono.p_phi;
    report.p_phi_poly = mono.p_phi_poly;
    report.vanishing_order_at_one = mono.vanishing_order_at_one;
    report.trace = mono.trace_value;

    report.purely_additive = is_purely_additive(report.stats);
    report.tame_violations = tame_compatibility(fiber, report.stats);
    report.tame_compatible = report.tame_violations.empty();

    if (report.purely_additive) {
        report.phi = phi_additive(fiber, report.stats);
        report.phi_prime = phi_prime_additive(fiber, report.stats);
        // P_phi(1) = phi'_A holds with or without tameness.
        if (report.trace != *report.phi_prime)
            throw InternalInconsistency("P_phi(1) = " + report.trace.get_str() +
                                        " differs from phi'_A = " + report.phi_prime->get_str());
    }
    report.euler_char = euler_char_neron(fiber, report.stats);
    report.trace_formula_holds = (report.euler_char == report.trace);

    if (!report.trace_formula_holds && report.tame_compatible)
        throw InternalInconsistency(
            "trace formula failed on a tame-compatible fiber: chi_et = " + report.euler_char.get_str() +
            ", trace = " + report.trace.get_str());

    try {
        report.serre = serre_class(fiber, report.stats, user_phi);
    } catch (const PhiUnavailable&) {
        report.serre = std::nullopt;
    }
    return report;
}

} // namespace nerontrace
