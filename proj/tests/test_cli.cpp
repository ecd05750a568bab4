#include "doctest.h"

#include <fstream>

#include "json.hpp"
#include "mcell/cli.hpp"

using namespace mcell;

namespace {

CommandResult run(std::vector<std::string> args) { return run_command(std::move(args)); }

}  // namespace

TEST_CASE("analyze golden output") {
    CommandResult r = run({"analyze", "Z(2^inf)"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("J: P\\{2}") != std::string::npos);
    CHECK(r.output.find("H: Z/2") != std::string::npos);
    CHECK(r.output.find("R: Z[1/2]") != std::string::npos);
    CHECK(r.output.find("Moore space: Yes") != std::string::npos);

    CommandResult c = run({"analyze", "Z[1/2] * Z/2"});
    CHECK(c.output.find("J: {}") != std::string::npos);
    CHECK(c.output.find("H: Z") != std::string::npos);
    CHECK(c.output.find("R: 0") != std::string::npos);
}

TEST_CASE("byte-identical output for identical invocations") {
    std::vector<std::vector<std::string>> invocations = {
        {"analyze", "Z(3^inf) + Z/5"},
        {"moore", "type(1)", "--check-presentation", "-n", "5"},
        {"hom", "Z/4", "Z/6"},
        {"radical", "Z/2", "Z/8 + Z/3"},
        {"quasiradical", "Z(3^inf)", "Z/3"},
        {"cellular", "--moore", "Z[1/2] * Z/2", "--space", "K(Z,2)"},
        {"cw", "--moore", "Q", "--space", "S^2"},
        {"--format", "structured", "cellular", "--moore", "type(1)", "--space", "S^2"},
        {"rules"},
        {"oracle", "hom", "Z/4", "Z/6"},
        {"oracle", "genby", "Z/9", "--bounds", "3:1"},
    };
    for (auto& args : invocations) {
        CommandResult a = run(args), b = run(args);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
        CHECK(!a.output.empty());
    }
}

TEST_CASE("cw golden text") {
    CommandResult r = run({"cw", "--moore", "Z[1/2]", "--space", "K(Z(2^inf),1)"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("CW_M X: K(Qhat(2),1)") != std::string::npos);

    CommandResult t = run({"cw", "--moore", "Z[1/2] * Z/2", "--space", "K(Z,2)"});
    CHECK(t.output.find("CW_M X: K(Z/2 + Zhat(2)/Z,1)") != std::string::npos);

    CommandResult s = run({"cw", "--moore", "Q", "--space", "S^2"});
    CHECK(s.output.find("(Prod_{p in P} Zhat(p))/Z") != std::string::npos);
}

TEST_CASE("cellular cites the counterexample theorem") {
    CommandResult r = run({"cellular", "--moore", "Z[1/2] * Z/2", "--space", "K(Z,2)"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("X is M-cellular: No") != std::string::npos);
    CHECK(r.output.find("Theorem 3.2") != std::string::npos);
}

TEST_CASE("every printed Yes/No verdict carries a citation") {
    std::vector<std::vector<std::string>> cases = {
        {"cellular", "--moore", "type(1)", "--space", "S^2"},
        {"cellular", "--moore", "Q", "--space", "S^2"},
        {"cellular", "--moore", "Z/3", "--space", "K(Z,1)"},
        {"radical", "Z(2^inf)", "Z/2"},
        {"quasiradical", "type(1)", "Z"},
        {"moore", "Z + Z/3"},
    };
    for (auto& args : cases) {
        CommandResult r = run(args);
        bool decided = r.output.find(": Yes") != std::string::npos ||
                       r.output.find(": No") != std::string::npos;
        if (decided) CHECK(r.output.find("citations:") != std::string::npos);
    }
}

TEST_CASE("exit codes: 0 ok, 2 input error, 3 unsupported") {
    CHECK(run({"analyze", "Z"}).exit_code == 0);
    CHECK(run({"analyze", "Z/0"}).exit_code == 2);
    CHECK(run({"analyze", "Zhat(2)"}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"cellular", "--moore", "Z/2 + Z/2", "--space", "pt"}).exit_code == 2);
    CHECK(run({"ext", "Z(2^inf)", "Z[1/3]"}).exit_code == 3);
    CHECK(run({"radical", "Z/2", "Z(2^inf)"}).exit_code == 3);
    // precondition violation reported with the failing prime
    CommandResult q = run({"quasiradical", "Z/3", "Q"});
    CHECK(q.exit_code == 2);
    CHECK(q.output.find("failing prime 3") != std::string::npos);
}

TEST_CASE("--strict-known turns Unknown into exit 3") {
    std::vector<std::string> args = {"cellular", "--moore", "Z(2^inf)", "--space", "K(Z/2,1)"};
    CommandResult relaxed = run(args);
    CHECK(relaxed.exit_code == 0);
    CHECK(relaxed.output.find("Unknown") != std::string::npos);
    std::vector<std::string> strict = {"--strict-known", "cellular", "--moore", "Z(2^inf)",
                                       "--space", "K(Z/2,1)"};
    CHECK(run(strict).exit_code == 3);
}

TEST_CASE("structured output is one JSON document mirroring the verdict") {
    CommandResult r = run({"--format", "structured", "cellular", "--moore", "Z[1/2] * Z/2",
                           "--space", "K(Z,2)"});
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["command"] == "cellular");
    CHECK(doc["status"] == "ok");
    CHECK(doc["payload"]["cellular"]["answer"] == "No");
    bool cites = false;
    for (auto& e : doc["payload"]["cellular"]["trail"])
        if (e["citation"] == "Theorem 3.2") cites = true;
    CHECK(cites);

    CommandResult m = run({"--format", "structured", "moore", "Z[1/3]", "--check-presentation",
                           "-n", "3"});
    auto mdoc = nlohmann::json::parse(m.output);
    CHECK(mdoc["payload"]["presentation"]["injective"] == true);
    CHECK(mdoc["payload"]["presentation"]["matrix"].size() == 3);
    CHECK(mdoc["payload"]["telescope"]["multipliers"].size() == 3);
}

TEST_CASE("moore command prints telescope and presentation") {
    CommandResult r = run({"moore", "Q", "-n", "4"});
    CHECK(r.output.find("telescope: S^1 --2--> S^1 --3--> S^1 --2--> S^1 --5--> S^1") !=
          std::string::npos);
    CommandResult c = run({"moore", "Z(2^inf) + Z(2^inf)"});
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("none known") != std::string::npos);
    CHECK(c.output.find("Question 2.4") != std::string::npos);
}

TEST_CASE("moore targets dispatch through the sharper rules") {
    CommandResult r = run({"cellular", "--moore", "Z[1/2]", "--space", "M(Z/3,1)"});
    CHECK(r.output.find("X is M-cellular: Yes") != std::string::npos);
    CHECK(r.output.find("Lemma 2.3") != std::string::npos);
}

TEST_CASE("oracle commands") {
    CommandResult h = run({"oracle", "hom", "Z/4", "Z/6"});
    CHECK(h.exit_code == 0);
    CHECK(h.output.find("= Z/2") != std::string::npos);
    CommandResult rad = run({"oracle", "radical", "Z/2", "Z/8"});
    CHECK(rad.output.find("(3 stages)") != std::string::npos);
    CommandResult g = run({"oracle", "genby", "Z/9", "--bounds", "3:1"});
    CHECK(g.output.find("= false") != std::string::npos);
    CommandResult g2 = run({"oracle", "genby", "Z/3 + Z/3", "--bounds", "3:1"});
    CHECK(g2.output.find("= true") != std::string::npos);
    CommandResult sweep = run({"oracle", "--sweep", "24"});
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.output.find("agreement: CLEAN") != std::string::npos);
    CommandResult sj = run({"--format", "structured", "oracle", "--sweep", "16"});
    auto doc = nlohmann::json::parse(sj.output);
    CHECK(doc["payload"]["agreement"] == true);
    CHECK(doc["payload"]["mismatches"].empty());
}

TEST_CASE("rules command matches the shipped data file") {
    CommandResult r = run({"rules"});
    std::ifstream in(std::string(MCELL_SOURCE_DIR) + "/data/homalg_rules.txt", std::ios::binary);
    REQUIRE(in.good());
    std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(r.output == file);
}
