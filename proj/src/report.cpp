#include "nerontrace/report.hpp"

#include <json.hpp>

#include <sstream>

namespace nerontrace {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cyclo_json(const CycloProduct& product) {
    ordered_json arr = ordered_json::array();
    for (const auto& [d, e] : product.exponents()) arr.push_back({d, e});
    return arr;
}

ordered_json poly_json(const IntPoly& poly) {
    ordered_json arr = ordered_json::array();
    for (const mpz_class& c : poly.coeffs()) arr.push_back(c.get_str());
    return arr;
}

ordered_json qcheck_json(const QPartReport& q) {
    ordered_json j;
    j["degenerate"] = q.degenerate;
    ordered_json factors = ordered_json::array();
    for (const mpz_class& d : q.invariant_factors) factors.push_back(d.get_str());
    j["invariant_factors"] = factors;
    j["coker_order"] = q.coker ? ordered_json(q.coker->get_str()) : ordered_json(nullptr);
    j["phi_A_prime"] = q.phi_prime.get_str();
    ordered_json primes = ordered_json::array();
    for (const QPartPrimeRow& row : q.primes) {
        ordered_json r;
        r["q"] = row.q.get_str();
        r["coker_valuation"] = row.coker_valuation;
        r["phi_valuation"] = row.phi_valuation;
        r["agree"] = row.agree;
        primes.push_back(r);
    }
    j["primes"] = primes;
    j["ok"] = q.ok;
    return j;
}

std::string opt_str(const std::optional<mpz_class>& v) {
    return v ? v->get_str() : std::string("n/a");
}

void qcheck_text_lines(std::ostringstream& out, const QPartReport& q, const char* indent) {
    out << indent << "invariant factors:  ";
    for (const mpz_class& d : q.invariant_factors) out << " " << d.get_str();
    out << "\n";
    out << indent << "coker order:         "
        << (q.coker ? q.coker->get_str() : std::string("infinite")) << "\n";
    out << indent << "phi_A':              " << q.phi_prime.get_str() << "\n";
    for (const QPartPrimeRow& row : q.primes)
        out << indent << "q=" << row.q.get_str() << ": coker valuation "
            << row.coker_valuation << ", phi valuation " << row.phi_valuation << ", "
            << (row.agree ? "agree" : "DISAGREE") << "\n";
}

} // namespace

std::string report_to_json(const TraceReport& report,
                           const std::optional<QPartReport>& qcheck) {
    ordered_json j;
    ordered_json stats;
    stats["edge_degree"] = report.stats.edge_degree;
    stats["chi_open"] = report.stats.chi_open;
    stats["prime_to_p_multiplicity"] = report.stats.prime_to_p_multiplicity;
    stats["abelian_rank"] = report.stats.abelian_rank;
    stats["toric_rank"] = report.stats.toric_rank;
    stats["multiplicity_gcd"] = report.stats.multiplicity_gcd;
    stats["multiplicity_gcd_prime_to_p"] = report.stats.multiplicity_gcd_prime_to_p;
    j["stats"] = stats;
    j["zeta"] = cyclo_json(report.zeta);
    j["p_phi"] = cyclo_json(report.p_phi);
    j["p_phi_poly"] =
        report.p_phi_poly ? poly_json(*report.p_phi_poly) : ordered_json(nullptr);
    j["phi_A"] = report.phi ? ordered_json(report.phi->get_str()) : ordered_json(nullptr);
    j["phi_A_prime"] =
        report.phi_prime ? ordered_json(report.phi_prime->get_str()) : ordered_json(nullptr);
    j["euler_char_neron"] = report.euler_char.get_str();
    j["trace_value"] = report.trace.get_str();
    j["purely_additive"] = report.purely_additive;
    j["tame_compatible"] = report.tame_compatible;
    j["trace_formula_holds"] = report.trace_formula_holds;
    if (qcheck) j["qcheck"] = qcheck_json(*qcheck);
    return j.dump(2) + "\n";
}

std::string report_to_text(const TraceReport& report,
                           const std::optional<QPartReport>& qcheck) {
    std::ostringstream out;
    out << "abelian rank:          " << report.stats.abelian_rank << "\n";
    out << "toric rank:            " << report.stats.toric_rank << "\n";
    out << "multiplicity gcd:      " << report.stats.multiplicity_gcd
        << " (prime-to-p part " << report.stats.multiplicity_gcd_prime_to_p << ")\n";
    out << "zeta (reciprocal):     " << report.zeta.str() << "\n";
    out << "P_phi:                 " << report.p_phi.str() << "\n";
    if (report.p_phi_poly)
        out << "P_phi expanded:        " << report.p_phi_poly->str() << "\n";
    out << "vanishing order at 1:  " << report.vanishing_order_at_one << "\n";
    out << "phi_A:                 " << opt_str(report.phi) << "\n";
    out << "phi_A':                " << opt_str(report.phi_prime) << "\n";
    out << "euler char (Neron):    " << report.euler_char.get_str() << "\n";
    out << "trace P_phi(1):        " << report.trace.get_str() << "\n";
    out << "purely additive:       " << (report.purely_additive ? "yes" : "no") << "\n";
    out << "tame compatible:       " << (report.tame_compatible ? "yes" : "no") << "\n";
    if (!report.tame_violations.empty()) {
        out << "tame violations:      ";
        for (const std::string& id : report.tame_violations) out << " " << id;
        out << "\n";
    }
    out << "trace formula:         " << (report.trace_formula_holds ? "holds" : "fails")
        << "\n";
    if (report.serre) {
        if (report.serre->is_zero())
            out << "serre class:           zero\n";
        else
            out << "serre class:           " << report.serre->phi().get_str()
                << " * [abelian dim " << report.serre->abelian_dim() << "]\n";
    } else {
        out << "serre class:           unavailable (supply phi_A)\n";
    }
    if (qcheck) {
        out << "q-part check:          " << (qcheck->ok ? "ok" : "MISMATCH")
            << (qcheck->degenerate ? " (degenerate)" : "") << "\n";
        qcheck_text_lines(out, *qcheck, "  ");
    }
    return out.str();
}

std::string qcheck_to_json(const QPartReport& report) {
    return qcheck_json(report).dump(2) + "\n";
}

std::string qcheck_to_text(const QPartReport& report) {
    std::ostringstream out;
    out << "q-part check:          " << (report.ok ? "ok" : "MISMATCH")
        << (report.degenerate ? " (degenerate)" : "") << "\n";
    qcheck_text_lines(out, report, "  ");
    return out.str();
}

} // namespace nerontrace
