#include "nerontrace/snf.hpp"

#include "nerontrace/component_group.hpp"
#include "nerontrace/errors.hpp"
#include "nerontrace/monodromy.hpp"

#include <cstddef>
#include <utility>

namespace nerontrace {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<mpz_class> smith_normal_form(IntMatrix m) {
    const std::size_t n = m.size();

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
    };
    // row[dst] += c * row[src], and the column analogue.
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t j = 0; j < n; ++j) m.at(dst, j) += c * m.at(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += c * m.at(i, src);
    };

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // Pivot on the smallest nonzero absolute value in the submatrix;
            // every re-entry of this loop strictly shrinks it, so we terminate.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (m.at(i, j) == 0) continue;
                    if (pi == n || mpz_cmpabs(m.at(i, j).get_mpz_t(),
                                              m.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == n) break; // submatrix is zero; remaining factors are 0
            if (pi != k) swap_rows(k, pi);
            if (pj != k) swap_cols(k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m.at(i, k) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), m.at(i, k).get_mpz_t(), m.at(k, k).get_mpz_t());
                add_row(i, k, -q);
                if (m.at(i, k) != 0) clean = false; // remainder; smaller pivot next pass
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (m.at(k, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), m.at(k, j).get_mpz_t(), m.at(k, k).get_mpz_t());
                add_col(j, k, -q);
                if (m.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot is alone in its row and column.  Make it divide the rest
            // of the submatrix so the diagonal forms a chain.
            bool divides = true;
            for (std::size_t i = k + 1; i < n && divides; ++i)
                for (std::size_t j = k + 1; j < n && divides; ++j)
                    if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(k, k).get_mpz_t())) {
                        add_row(k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }

    std::vector<mpz_class> diag;
    diag.reserve(n);
    for (std::size_t k = 0; k < n; ++k) diag.push_back(abs(m.at(k, k)));
    return diag;
}

std::optional<mpz_class> coker_order(const IntMatrix& m) {
    mpz_class order = 1;
    for (const mpz_class& d : smith_normal_form(m)) {
        if (d == 0) return std::nullopt;
        order *= d;
    }
    return order;
}

IntMatrix companion(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic())
        throw NotMonic("companion matrix requires a monic polynomial of degree >= 1, got " +
                       p.str());
    const std::size_t n = static_cast<std::size_t>(p.degree());
    IntMatrix c(n);
    for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
    return c;
}

QPartReport check_q_part_identity(const SpecialFiber& fiber) {
    const FiberStats fiber_stats = stats(fiber);
    if (!is_purely_additive(fiber_stats))
        throw NotPurelyAdditive(
            "q-part identity is stated for purely additive fibers; abelian rank " +
            std::to_string(fiber_stats.abelian_rank) + ", toric rank " +
            std::to_string(fiber_stats.toric_rank));

    QPartReport report;
    report.phi_prime = phi_prime_additive(fiber, fiber_stats);

    const MonodromyResult mono = monodromy(fiber);
    const IntPoly p_phi = mono.p_phi.expand();

    if (p_phi.degree() == 0) {
        // Good-reduction shadow: P_phi constant, Id - C is the empty matrix.
        report.degenerate = true;
        report.coker = 1;
        report.ok = (report.phi_prime == 1);
        return report;
    }

    const std::size_t n = static_cast<std::size_t>(p_phi.degree());
    const IntMatrix c = companion(p_phi);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= c.at(i, j);

    report.invariant_factors = smith_normal_form(m);
    mpz_class order = 1;
    bool finite = true;
    for (const mpz_class& d : report.invariant_factors) {
        if (d == 0) finite = false;
        order *= d;
    }
    if (!finite) {
        report.ok = false;
        return report;
    }
    report.coker = order;

    const auto coker_primes = q_primary_decomposition(order);
    const auto phi_primes = q_primary_decomposition(report.phi_prime);
    std::map<mpz_class, std::pair<unsigned, unsigned>> merged;
    for (const auto& [q, e] : coker_primes) merged[q].first = e;
    for (const auto& [q, e] : phi_primes) merged[q].second = e;

    bool all_agree = true;
    for (const auto& [q, vals] : merged) {
        if (fiber.p() > 1 && q == fiber.p()) continue;
        QPartPrimeRow row;
        row.q = q;
        row.coker_valuation = vals.first;
        row.phi_valuation = vals.second;
        row.agree = (vals.first == vals.second);
        all_agree = all_agree && row.agree;
        report.primes.push_back(row);
    }

    report.ok = all_agree && (order == report.phi_prime);
    return report;
}

} // namespace nerontrace
