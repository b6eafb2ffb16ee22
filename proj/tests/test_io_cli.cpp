#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sr/corpus.hpp>
#include <sr/error.hpp>
#include <sr/families.hpp>
#include <sr/sc_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace sr;
using nlohmann::json;

namespace {

std::string parse_error_message(const std::string& text) {
    try {
        parse_sc(text, "t.sc");
    } catch (const Error& e) {
        return e.what();
    }
    return "<no error>";
}

struct RunResult {
    int status = -1;
    std::string output; // stdout and stderr merged
};

// Runs the command line tool; requires the SRCALC_BIN environment variable.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("SRCALC_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SRCALC_BIN must point at the srcalc binary");
    std::string command = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
        r.output.append(buffer, got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        std::filesystem::path p =
            std::filesystem::temp_directory_path() / "srcalc-cli-tests";
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    std::filesystem::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p.string();
}

const std::string kPentagon = "vertices 5\n0 1 2\n0 1 4\n0 3 4\n1 2 3\n2 3 4\n";

} // namespace

TEST_CASE("sc parse errors carry source, line and column") {
    CHECK(parse_error_message("") == "t.sc:1:1: missing 'vertices <n>' declaration");
    CHECK(parse_error_message("0 1 2\n") ==
          "t.sc:1:1: expected 'vertices <n>' as the first declaration");
    CHECK(parse_error_message("vertices x\n0 1\n") ==
          "t.sc:1:10: expected an integer, got 'x'");
    CHECK(parse_error_message("vertices 3\n0 1\n2 3\n") ==
          "t.sc:3:3: vertex index 3 out of range [0, 3)");
    CHECK(parse_error_message("vertices 3\n0 1\n1 z\n") ==
          "t.sc:3:3: expected an integer, got 'z'");
    try {
        parse_sc("vertices 3\n# nothing here\n");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyFacetList);
    }
}

TEST_CASE("sc text round trips through serialize and parse") {
    for (const CorpusEntry& entry : standard_corpus()) {
        SimplicialComplex back = parse_sc(to_sc(entry.complex), entry.name);
        CHECK(back.vertex_count() == entry.complex.vertex_count());
        CHECK(back.facets() == entry.complex.facets());
    }
}

TEST_CASE("sc parser accepts comments and loose whitespace") {
    SimplicialComplex c = parse_sc(
        "# leading comment\nvertices 5 # trailing\n\n 0 1 2\n0 1 4 # t\n"
        "0 3 4\n1 2 3\n2 3 4\n");
    CHECK(c.facets() == hibi_cycle(3).facets());
}

TEST_CASE("rationals serialize with an explicit denominator") {
    CHECK(rat_to_string(Rat(3)) == "3/1");
    CHECK(rat_to_string(Rat(5, 2)) == "5/2");
    CHECK(rat_to_string(Rat(-1, 3)) == "-1/3");
}

TEST_CASE("cli props reports the pentagon invariants") {
    std::string sc = write_scratch("pentagon.sc", kPentagon);
    RunResult r = run_cli("props " + sc);
    REQUIRE(r.status == 0);
    json report = json::parse(r.output);
    CHECK(report.at("n") == 5);
    CHECK(report.at("d") == 3);
    CHECK(report.at("c") == 2);
    CHECK(report.at("q") == 3);
    CHECK(report.at("e") == 5);
    CHECK(report.at("h") == 1);
    CHECK(report.at("buchsbaum") == true);
    CHECK(report.at("cohenMacaulay") == false);
    CHECK(report.at("qLinear") == true);
    CHECK(report.at("minMultTypeQ") == true);
    CHECK(report.at("field") == "q");
    CHECK(report.at("schema_version") == 1);

    SUBCASE("two runs are byte identical") {
        RunResult again = run_cli("props " + sc);
        CHECK(again.status == 0);
        CHECK(again.output == r.output);
    }
    SUBCASE("text mode emits key colon value lines") {
        RunResult text = run_cli("props " + sc + " --text");
        CHECK(text.status == 0);
        CHECK(text.output.find("d: 3") != std::string::npos);
        CHECK(text.output.find("q-linear resolution: yes") != std::string::npos);
    }
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("props --help").status == 0);
    CHECK(run_cli("").status == 2);               // a subcommand is required
    CHECK(run_cli("frobnicate").status == 2);     // unknown subcommand
    CHECK(run_cli("props /nonexistent.sc").status == 2);
    CHECK(run_cli("gen terai 7").status == 2);    // 15 is not prime
    std::string sc = write_scratch("pentagon.sc", kPentagon);
    CHECK(run_cli("props " + sc + " --field gf:4").status == 2); // not prime
    CHECK(run_cli("dual " + sc + " --json --text").status == 2); // excludes
    RunResult bad = run_cli("props " + sc + " --field gf:4");
    CHECK(bad.output.find("error ParameterRange") != std::string::npos);
}

TEST_CASE("cli gen writes every family and props loads it back") {
    const std::vector<std::string> smallest = {
        "skeleton 4 2",          "max-embdim-cm 2 3", "disjoint-union-q2 3 3 1",
        "hibi-cycle 3",          "terai 5",           "hanano 5",
        "cyclic-boundary 5 3",   "cyclic-dual 3 3",   "bruns-hibi 6",
        "bruns-hibi-dual 6",     "rp2",               "moebius",
    };
    REQUIRE(smallest.size() == family_list().size());
    int index = 0;
    for (const std::string& spec_args : smallest) {
        std::filesystem::path out =
            scratch_dir() / ("fam" + std::to_string(index++) + ".sc");
        RunResult gen = run_cli("gen " + spec_args + " --out " + out.string());
        CHECK_MESSAGE(gen.status == 0, spec_args, ": ", gen.output);
        RunResult props = run_cli("props " + out.string());
        CHECK_MESSAGE(props.status == 0, spec_args, ": ", props.output);
        json report = json::parse(props.output);
        CHECK(report.at("n").get<int>() >= 3);
        // the written file is also loadable through the library
        CHECK(load_sc(out.string()).facets().size() >= 1);
    }
}

TEST_CASE("cli verify bundle passes over a small field") {
    RunResult r = run_cli("verify ex5.7 --field gf:2");
    CHECK(r.status == 0);
    json bundles = json::parse(r.output);
    REQUIRE(bundles.is_array());
    REQUIRE(bundles.size() == 1);
    CHECK(bundles[0].at("bundle") == "ex5.7");
    CHECK(bundles[0].at("passed") == true);
    CHECK(bundles[0].at("failures").empty());
}

TEST_CASE("cli explore realizes the documented target") {
    RunResult r = run_cli("explore 3 3 3 2 --seed 1");
    REQUIRE(r.status == 0);
    json outcome = json::parse(r.output);
    CHECK(outcome.at("status") == "Realized");
    CHECK(outcome.at("c") == 3);
    CHECK(outcome.at("d") == 3);
    CHECK(outcome.at("q") == 3);
    CHECK(outcome.at("h") == 2);
    REQUIRE(outcome.contains("witness"));

    SUBCASE("the witness written via --out parses and matches") {
        std::filesystem::path out = scratch_dir() / "witness.sc";
        RunResult with_out =
            run_cli("explore 3 3 3 2 --seed 1 --out " + out.string());
        CHECK(with_out.status == 0);
        SimplicialComplex witness = load_sc(out.string());
        CHECK(witness.vertex_count() == outcome.at("witness").at("n").get<int>());
    }
}

TEST_CASE("cli dual and cover emit loadable complexes") {
    std::string sc = write_scratch("pentagon.sc", kPentagon);

    std::filesystem::path dual_out = scratch_dir() / "dual.sc";
    RunResult dual = run_cli("dual " + sc + " --out " + dual_out.string());
    CHECK(dual.status == 0);
    SimplicialComplex dual_back = load_sc(dual_out.string());
    CHECK(dual_back.facets().size() == 5); // the dual pentagon

    std::filesystem::path cover_out = scratch_dir() / "cover.sc";
    RunResult cover = run_cli("cover " + sc + " --out " + cover_out.string());
    CHECK(cover.status == 0);
    CHECK(load_sc(cover_out.string()).facets().size() == 6);

    RunResult cover_text = run_cli("cover " + sc + " --text");
    CHECK(cover_text.status == 0);
    CHECK(cover_text.output.find("vertices 5") != std::string::npos);
    CHECK(cover_text.output.find("1 3 4") != std::string::npos);
}

TEST_CASE("cli homology and betti text modes") {
    std::string sc = write_scratch("pentagon.sc", kPentagon);
    RunResult hom = run_cli("homology " + sc + " --text");
    CHECK(hom.status == 0);
    CHECK(hom.output.find("H~1 1") != std::string::npos);
    RunResult betti = run_cli("betti " + sc + " --text");
    CHECK(betti.status == 0);
    CHECK(betti.output.find("beta 1 3 5") != std::string::npos);
    CHECK(betti.output.find("beta 3 5 1") != std::string::npos);
    CHECK(betti.output.find("regularity 2") != std::string::npos);
}
