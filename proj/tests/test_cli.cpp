#include "nerontrace/cli.hpp"
#include "nerontrace/component_group.hpp"
#include "nerontrace/corpus.hpp"

#include <doctest.h>
#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace nerontrace;

namespace {

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("nerontrace-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++) + ".json");
        std::ofstream(path) << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("compute: text report on a tame purely additive fiber") {
    const TempFile doc(fiber_to_document(kodaira_In_star(0)));
    const RunResult r = run_cli({"compute", "--input", doc.str(), "--p", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "phi_A:                 4"));
    CHECK(contains(r.out, "trace P_phi(1):        4"));
    CHECK(contains(r.out, "trace formula:         holds"));
    CHECK(contains(r.out, "q-part check:          ok"));
    CHECK(r.err.empty());
}

TEST_CASE("compute: json report round-trips against the library") {
    const TempFile doc(fiber_to_document(kodaira_In_star(0, 3)));
    const RunResult r = run_cli({"compute", "--input", doc.str(), "--json"});
    REQUIRE(r.code == 0);

    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["stats"]["toric_rank"] == 0);
    CHECK(j["stats"]["abelian_rank"] == 0);
    CHECK(j["zeta"] == nlohmann::json::parse("[[1,-2],[2,2]]"));
    CHECK(j["p_phi"] == nlohmann::json::parse("[[2,2]]"));
    CHECK(j["p_phi_poly"] == std::vector<std::string>{"1", "2", "1"});
    CHECK(j["phi_A"] == "4");
    CHECK(j["phi_A_prime"] == "4");
    CHECK(j["euler_char_neron"] == "4");
    CHECK(j["trace_value"] == "4");
    CHECK(j["purely_additive"] == true);
    CHECK(j["tame_compatible"] == true);
    CHECK(j["trace_formula_holds"] == true);
    REQUIRE(j.contains("qcheck"));
    CHECK(j["qcheck"]["ok"] == true);
    CHECK(j["qcheck"]["coker_order"] == "4");

    const TraceReport direct = verify_trace(kodaira_In_star(0, 3));
    std::vector<std::string> coeffs;
    for (const mpz_class& c : direct.p_phi_poly->coeffs()) coeffs.push_back(c.get_str());
    CHECK(j["p_phi_poly"] == coeffs);
}

TEST_CASE("compute: identical invocations produce identical bytes") {
    const TempFile doc(fiber_to_document(kodaira_IV_star()));
    const RunResult a = run_cli({"compute", "--input", doc.str(), "--json"});
    const RunResult b = run_cli({"compute", "--input", doc.str(), "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("compute: multiplicative reduction leaves phi_A open and skips qcheck") {
    const TempFile doc(fiber_to_document(kodaira_In(3)));
    const RunResult r = run_cli({"compute", "--input", doc.str(), "--json"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["phi_A"].is_null());
    CHECK(j["trace_value"] == "0");
    CHECK(j["euler_char_neron"] == "0");
    CHECK(j["trace_formula_holds"] == true);
    CHECK_FALSE(j.contains("qcheck"));
}

TEST_CASE("compute: --assert-tame") {
    const TempFile doc(fiber_to_document(kodaira_In_star(0)));
    const RunResult ok = run_cli({"compute", "--input", doc.str(), "--p", "3",
                                  "--assert-tame"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "zeta (tame branch):"));

    const RunResult wild = run_cli({"compute", "--input", doc.str(), "--p", "2",
                                    "--assert-tame"});
    CHECK(wild.code == 1);
    CHECK(contains(wild.err, "tameness violated"));
}

TEST_CASE("compute: user-supplied component-group order") {
    const TempFile doc(
        R"({"p": 1, "components": [{"id": "e", "genus": 1, "multiplicity": 1}], "edges": []})");
    const RunResult bare = run_cli({"compute", "--input", doc.str()});
    CHECK(bare.code == 0);
    CHECK(contains(bare.out, "serre class:           unavailable"));

    const RunResult with_phi = run_cli({"compute", "--input", doc.str(), "--phi", "1"});
    CHECK(with_phi.code == 0);
    CHECK(contains(with_phi.out, "serre class:           1 * [abelian dim 1]"));

    CHECK(run_cli({"compute", "--input", doc.str(), "--phi", "0"}).code == 1);
    CHECK(run_cli({"compute", "--input", doc.str(), "--phi", "xyz"}).code == 1);
}

TEST_CASE("compute: realizability warnings go to stderr") {
    const TempFile doc(
        R"({"p": 1, "components": [{"id": "a", "genus": 0, "multiplicity": 2},
                                   {"id": "b", "genus": 0, "multiplicity": 3}],
            "edges": [["a", "b"]]})");
    const RunResult r = run_cli({"compute", "--input", doc.str()});
    CHECK(contains(r.err, "warning:"));
    CHECK(contains(r.err, "'a'"));
    CHECK(contains(r.err, "'b'"));
}

TEST_CASE("compute: input failures exit 1") {
    CHECK(run_cli({"compute", "--input", "/no/such/file.json"}).code == 1);

    const TempFile garbage("{ not json");
    CHECK(run_cli({"compute", "--input", garbage.str()}).code == 1);

    const TempFile doc(fiber_to_document(kodaira_In(3)));
    CHECK(run_cli({"compute", "--input", doc.str(), "--p", "4"}).code == 1);
}

TEST_CASE("corpus subcommand") {
    const RunResult verify = run_cli({"corpus", "--verify"});
    CHECK(verify.code == 0);
    CHECK(contains(verify.out, "I_2: ok"));
    CHECK(contains(verify.out, "II*: ok"));
    CHECK_FALSE(contains(verify.out, "MISMATCH"));

    const RunResult list = run_cli({"corpus"});
    CHECK(list.code == 0);
    std::size_t lines = 0;
    for (char c : list.out)
        if (c == '\n') ++lines;
    CHECK(lines == corpus().size());

    const RunResult show = run_cli({"corpus", "--show", "I_0*"});
    CHECK(show.code == 0);
    CHECK(contains(show.out, "expected phi_A: 4"));
    CHECK(contains(show.out, "\"components\""));

    CHECK(run_cli({"corpus", "--show", "no-such-type"}).code == 1);
}

TEST_CASE("random subcommand") {
    const RunResult docs =
        run_cli({"random", "--seed", "5", "--count", "3", "--profile", "with-cycles"});
    CHECK(docs.code == 0);
    CHECK(contains(docs.out, "\"edges\""));

    const RunResult checked = run_cli({"random", "--seed", "99", "--count", "25",
                                       "--profile", "purely-additive-tree", "--check"});
    CHECK(checked.code == 0);
    CHECK(contains(checked.out, "checked 25 fibers"));
    CHECK(contains(checked.out, "ok"));

    CHECK(run_cli({"random", "--profile", "bogus"}).code == 1);
}

TEST_CASE("qcheck subcommand") {
    const TempFile doc(fiber_to_document(kodaira_In_star(0, 3)));
    const RunResult text = run_cli({"qcheck", "--input", doc.str()});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "q-part check:          ok"));
    CHECK(contains(text.out, "q=2: coker valuation 2, phi valuation 2, agree"));

    const RunResult json = run_cli({"qcheck", "--input", doc.str(), "--json"});
    REQUIRE(json.code == 0);
    const nlohmann::json j = nlohmann::json::parse(json.out);
    CHECK(j["ok"] == true);
    CHECK(j["coker_order"] == "4");
    CHECK(j["phi_A_prime"] == "4");
    CHECK(j["invariant_factors"] == std::vector<std::string>{"1", "4"});

    // cycle: not purely additive, exits 1 via NotPurelyAdditive
    const TempFile cycle(fiber_to_document(kodaira_In(3)));
    CHECK(run_cli({"qcheck", "--input", cycle.str()}).code == 1);
}

TEST_CASE("argument errors and help") {
    CHECK(run_cli({}).code == 1);                      // subcommand required
    CHECK(run_cli({"compute"}).code == 1);             // --input required
    CHECK(run_cli({"no-such-subcommand"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(contains(run_cli({"--help"}).out, "compute"));
}
