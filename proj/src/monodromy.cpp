#include "nerontrace/monodromy.hpp"

#include "nerontrace/arith.hpp"
#include "nerontrace/errors.hpp"

#include <algorithm>

namespace nerontrace {

namespace {

BinomialFactors merge_factors(const std::vector<std::uint64_t>& ns, const std::vector<std::int64_t>& chi)
{
    BinomialFactors factors;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (chi[i] == 0)
            continue;
        auto [it, inserted] = factors.emplace(ns[i], -chi[i]);
        if (!inserted) {
            it->second -= chi[i];
            if (it->second == 0)
                factors.erase(it);
        }
    }
    return factors;
}

} // namespace

BinomialFactors zeta_factors(const SpecialFiber& fiber, const FiberStats& s)
{
    return merge_factors(s.prime_to_p_multiplicity, s.chi_open);
}

CycloProduct zeta(const SpecialFiber& fiber)
{
    return binomial_product(zeta_factors(fiber, stats(fiber)));
}

BinomialFactors zeta_tame_factors(const SpecialFiber& fiber, const FiberStats& s,
                                  bool caller_asserts_tame_and_hypothesis)
{
    if (!caller_asserts_tame_and_hypothesis)
        throw HypothesisNotAsserted(
            "tame zeta requires the caller to assert cohomological tameness "
            "and the gcd-prime-to-p or genus hypothesis");
    auto violations = tame_compatibility(fiber, s);
    if (!violations.empty()) {
        std::string msg = "tameness violated on component(s):";
        for (const auto& id : violations)
            msg += " " + id;
        throw TamenessViolation(msg);
    }
    std::vector<std::uint64_t> mults;
    mults.reserve(fiber.size());
    for (const Component& c : fiber.components())
        mults.push_back(c.multiplicity);
    return merge_factors(mults, s.chi_open);
}

CycloProduct zeta_tame(const SpecialFiber& fiber, bool caller_asserts_tame_and_hypothesis)
{
    return binomial_product(zeta_tame_factors(fiber, stats(fiber), caller_asserts_tame_and_hypothesis));
}

CycloProduct p_phi_via_zeta(const SpecialFiber& fiber)
{
    CycloProduct p = zeta(fiber);
    p.mul_phi(1, 2);
    return p;
}

CycloProduct p_phi_lorenzini(const SpecialFiber& fiber)
{
    const FiberStats s = stats(fiber);
    CycloProduct p;
    p.mul_phi(1, 2 * static_cast<std::int64_t>(s.abelian_rank + s.toric_rank));
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        // (T^{N'} - 1)/(T - 1) = prod_{d | N', d > 1} Phi_d
        const std::int64_t e = 2 * static_cast<std::int64_t>(fiber.components()[i].genus) +
                               static_cast<std::int64_t>(s.edge_degree[i]) - 2;
        if (e == 0)
            continue;
        for (std::uint64_t d : divisors(s.prime_to_p_multiplicity[i]))
            if (d > 1)
                p.mul_phi(d, e);
    }
    return p;
}

mpz_class trace_value(const CycloProduct& p_phi)
{
    const EvalAtOne at_one = p_phi.eval_at_one();
    if (at_one.order < 0)
        throw PoleAtOne("P_phi has a pole at T=1 of order " + std::to_string(-at_one.order));
    if (at_one.order > 0)
        return 0;
    if (at_one.value.get_den() != 1)
        throw NonIntegralResult("P_phi(1) = " + at_one.value.get_str() +
                                " is not an integer; graph not realizable as a minimal fiber");
    return at_one.value.get_num();
}

MonodromyResult monodromy(const SpecialFiber& fiber)
{
    MonodromyResult result;
    result.zeta = zeta(fiber);
    result.p_phi = p_phi_via_zeta(fiber);
    const CycloProduct lorenzini = p_phi_lorenzini(fiber);
    if (result.p_phi != lorenzini)
        throw InternalInconsistency("P_phi routes disagree: " + result.p_phi.str() +
                                    " (via zeta) vs " + lorenzini.str() + " (Lorenzini)");
    const auto& exps = result.p_phi.exponents();
    const bool expandable =
        std::all_of(exps.begin(), exps.end(), [](const auto& de) { return de.second >= 0; });
    if (expandable)
        result.p_phi_poly = result.p_phi.expand();
    result.vanishing_order_at_one = result.p_phi.exponent(1);
    result.trace_value = trace_value(result.p_phi);
    return result;
}

} // namespace nerontrace
