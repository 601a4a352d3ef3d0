#include "nerontrace/cli.hpp"

#include "nerontrace/component_group.hpp"
#include "nerontrace/corpus.hpp"
#include "nerontrace/errors.hpp"
#include "nerontrace/monodromy.hpp"
#include "nerontrace/random_fiber.hpp"
#include "nerontrace/report.hpp"
#include "nerontrace/snf.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace nerontrace {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SpecialFiber load_fiber(const std::string& path, std::uint64_t p_override) {
    SpecialFiber fiber = parse_fiber(read_file(path));
    return p_override ? with_p(fiber, p_override) : fiber;
}

mpz_class parse_mpz(const std::string& text) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw ValidationError("not an integer: '" + text + "'");
    }
}

void warn_realizability(const SpecialFiber& fiber, std::ostream& err) {
    for (const std::string& id : realizability_check(fiber))
        err << "warning: multiplicity of '" << id
            << "' does not divide the sum over its incident edges; "
               "no relatively minimal model produces this graph\n";
}

int cmd_compute(const std::string& input, std::uint64_t p_override, bool json,
                bool assert_tame, const std::string& phi_text,
                std::ostream& out, std::ostream& err) {
    const SpecialFiber fiber = load_fiber(input, p_override);
    warn_realizability(fiber, err);

    std::optional<mpz_class> user_phi;
    if (!phi_text.empty()) {
        user_phi = parse_mpz(phi_text);
        if (*user_phi < 1)
            throw ValidationError("--phi must be a positive integer, got " + phi_text);
    }

    const TraceReport report = verify_trace(fiber, user_phi);

    // The tame branch is an assertion surface: it throws TamenessViolation
    // on incompatible fibers and otherwise reproduces zeta, because the
    // components whose multiplicity p divides contribute only when their
    // open Euler characteristic is nonzero.
    std::optional<CycloProduct> tame;
    if (assert_tame) tame = zeta_tame(fiber, true);

    std::optional<QPartReport> qcheck;
    if (report.purely_additive && report.p_phi_poly)
        qcheck = check_q_part_identity(fiber);

    if (json) {
        out << report_to_json(report, qcheck);
    } else {
        out << report_to_text(report, qcheck);
        if (tame) out << "zeta (tame branch):    " << tame->str() << "\n";
    }
    return 0;
}

bool corpus_entry_ok(const CorpusEntry& entry, std::uint64_t p, std::string& diag) {
    const SpecialFiber fiber = p == 1 ? entry.fiber : with_p(entry.fiber, p);
    const TraceReport report = verify_trace(fiber);
    if (!report.p_phi_poly) {
        diag = "P_phi did not expand";
        return false;
    }
    if (*report.p_phi_poly != entry.expected.p_phi) {
        diag = "P_phi = " + report.p_phi_poly->str() + ", expected " + entry.expected.p_phi.str();
        return false;
    }
    if (report.trace != entry.expected.trace) {
        diag = "trace = " + report.trace.get_str() + ", expected " +
               entry.expected.trace.get_str();
        return false;
    }
    if (entry.expected.phi && (!report.phi || *report.phi != *entry.expected.phi)) {
        diag = "phi_A = " + (report.phi ? report.phi->get_str() : std::string("n/a")) +
               ", expected " + entry.expected.phi->get_str();
        return false;
    }
    if (!report.trace_formula_holds) {
        diag = "trace formula failed at p = " + std::to_string(p);
        return false;
    }
    return true;
}

int cmd_corpus(bool verify, bool list, const std::string& show,
               std::ostream& out, std::ostream& err) {
    if (verify) {
        bool all_ok = true;
        for (const CorpusEntry& entry : corpus()) {
            std::string diag;
            // p = 1 imposes no condition; 7 is coprime to every corpus
            // multiplicity, so the trace formula must hold at both.
            const bool ok = corpus_entry_ok(entry, 1, diag) && corpus_entry_ok(entry, 7, diag);
            out << entry.name << ": " << (ok ? "ok" : "MISMATCH (" + diag + ")") << "\n";
            all_ok = all_ok && ok;
        }
        if (!all_ok) {
            err << "corpus verification failed\n";
            return 2;
        }
        return 0;
    }
    if (!show.empty()) {
        const CorpusEntry* entry = corpus_find(show);
        if (!entry) throw ValidationError("no corpus entry named '" + show + "'");
        out << "name:           " << entry->name << "\n";
        out << "expected P_phi: " << entry->expected.p_phi.str() << "\n";
        out << "expected phi_A: "
            << (entry->expected.phi ? entry->expected.phi->get_str() : std::string("n/a"))
            << "\n";
        out << "expected trace: " << entry->expected.trace.get_str() << "\n";
        out << fiber_to_document(entry->fiber);
        return 0;
    }
    (void)list; // plain `corpus` lists as well
    for (const CorpusEntry& entry : corpus()) out << entry.name << "\n";
    return 0;
}

int cmd_random(std::uint64_t seed, const std::string& profile_text, std::uint64_t count,
               bool check, std::ostream& out, std::ostream& err) {
    const FiberProfile profile = parse_profile(profile_text);
    for (std::uint64_t k = 0; k < count; ++k) {
        const SpecialFiber fiber = random_fiber(seed + k, profile);
        if (!check) {
            out << fiber_to_document(fiber);
            continue;
        }

        const FiberStats s = stats(fiber);
        std::string failure;
        switch (profile) {
            case FiberProfile::purely_additive_tree:
                if (!is_purely_additive(s)) failure = "fiber is not purely additive";
                else if (!realizability_check(fiber).empty())
                    failure = "divisibility rule violated";
                break;
            case FiberProfile::with_cycles:
                if (s.toric_rank == 0) failure = "toric rank is zero";
                break;
            case FiberProfile::mixed_genus:
                if (s.abelian_rank == 0) failure = "abelian rank is zero";
                break;
        }
        if (failure.empty()) {
            const TraceReport report = verify_trace(fiber);
            const std::int64_t expected_order =
                2 * static_cast<std::int64_t>(s.abelian_rank + s.toric_rank);
            if (report.vanishing_order_at_one != expected_order)
                failure = "vanishing order " + std::to_string(report.vanishing_order_at_one) +
                          " != 2a+2t = " + std::to_string(expected_order);
            else if (report.purely_additive) {
                if (!report.p_phi_poly) failure = "P_phi did not expand";
                else if (!check_q_part_identity(fiber).ok) failure = "q-part mismatch";
            }
        }
        if (!failure.empty()) {
            err << "seed " << seed + k << " (" << profile_name(profile)
                << "): " << failure << "\n";
            return 2;
        }
    }
    if (check)
        out << "checked " << count << " fibers (profile " << profile_name(profile)
            << "): ok\n";
    return 0;
}

int cmd_qcheck(const std::string& input, std::uint64_t p_override, bool json,
               std::ostream& out, std::ostream& err) {
    const SpecialFiber fiber = load_fiber(input, p_override);
    warn_realizability(fiber, err);
    const QPartReport report = check_q_part_identity(fiber);
    out << (json ? qcheck_to_json(report) : qcheck_to_text(report));
    if (!report.ok) {
        err << "q-part identity failed: the Smith-form cokernel order disagrees "
               "with the multiplicity product\n";
        return 2;
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monodromy zeta functions, tame characteristic polynomials and "
                 "Neron component groups of sncd special fibers, in exact arithmetic"};
    app.require_subcommand(1);

    std::string input, phi_text, show_name;
    std::uint64_t p_override = 0; // 0 = keep the document's p
    bool json = false, assert_tame = false;

    CLI::App* compute = app.add_subcommand("compute", "Run the full pipeline on a fiber document");
    compute->add_option("--input", input, "fiber document path")->required();
    compute->add_option("--p", p_override, "override the residue characteristic exponent");
    compute->add_flag("--json", json, "emit the machine-readable report");
    compute->add_flag("--assert-tame", assert_tame,
                      "assert cohomological tameness and the genus-or-gcd hypothesis; "
                      "enables the tame zeta branch");
    compute->add_option("--phi", phi_text,
                        "component-group order to use when the graph cannot determine it "
                        "(toric rank zero, abelian rank positive)");

    bool corpus_verify = false, corpus_list = false;
    CLI::App* corpus_cmd = app.add_subcommand("corpus", "Built-in Kodaira reduction types");
    corpus_cmd->add_flag("--verify", corpus_verify,
                         "recompute every entry and compare with the frozen values");
    corpus_cmd->add_flag("--list", corpus_list, "list entry names");
    corpus_cmd->add_option("--show", show_name, "print one entry and its fiber document");

    std::uint64_t seed = 0, count = 1;
    std::string profile_text = "purely-additive-tree";
    bool random_check = false;
    CLI::App* random_cmd = app.add_subcommand("random", "Generate pseudo-random fibers");
    random_cmd->add_option("--seed", seed, "base seed; fiber k uses seed+k");
    random_cmd->add_option("--profile", profile_text,
                           "purely-additive-tree | with-cycles | mixed-genus");
    random_cmd->add_option("--count", count, "number of fibers");
    random_cmd->add_flag("--check", random_check,
                         "verify the pipeline identities instead of printing documents");

    std::string qcheck_input;
    std::uint64_t qcheck_p = 0;
    bool qcheck_json_flag = false;
    CLI::App* qcheck_cmd =
        app.add_subcommand("qcheck", "Independent Smith-form check of the q-part identity");
    qcheck_cmd->add_option("--input", qcheck_input, "fiber document path")->required();
    qcheck_cmd->add_option("--p", qcheck_p, "override the residue characteristic exponent");
    qcheck_cmd->add_flag("--json", qcheck_json_flag, "emit the machine-readable report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (compute->parsed())
            return cmd_compute(input, p_override, json, assert_tame, phi_text, out, err);
        if (corpus_cmd->parsed())
            return cmd_corpus(corpus_verify, corpus_list, show_name, out, err);
        if (random_cmd->parsed())
            return cmd_random(seed, profile_text, count, random_check, out, err);
        if (qcheck_cmd->parsed())
            return cmd_qcheck(qcheck_input, qcheck_p, qcheck_json_flag, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace nerontrace
