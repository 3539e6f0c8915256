#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

// End-to-end tests of the installed command-line surface: exact stdout,
// exact exit codes, and file contents. CPTA_CLI_PATH comes from the build.

namespace {

struct CmdResult {
    int status = -1;
    std::string out; // stdout + stderr interleaved
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = "\"" CPTA_CLI_PATH "\" " + args + " 2>&1";
    CmdResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::filesystem::path work_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("cpta-cli-" +
                  std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

// the smallest tkn instance (k=2, n=3), generated once through the binary
std::string t23_path() {
    static const std::string path = [] {
        const std::string p = (work_dir() / "t23.json").string();
        const CmdResult r = run_cli("generate --family tkn --n 3 --k 2 -o \"" + p + "\"");
        REQUIRE(r.status == 0);
        REQUIRE(r.out == "n=3 t=4 rules=16\n");
        return p;
    }();
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << text;
}

} // namespace

TEST_CASE("generate writes canonical instance files") {
    const std::string text = slurp(t23_path());
    CHECK(text.find("\"n\": 3") != std::string::npos);
    CHECK(text.find("\"00\": \"1>0\"") != std::string::npos);

    // regeneration is byte-identical
    const std::string again = (work_dir() / "t23-again.json").string();
    const CmdResult r = run_cli("generate --family tkn --n 3 --k 2 -o \"" + again + "\"");
    CHECK(r.status == 0);
    CHECK(slurp(again) == text);

    const std::string rnd1 = (work_dir() / "r1.json").string();
    const std::string rnd2 = (work_dir() / "r2.json").string();
    CHECK(run_cli("generate --family random --n 5 --t 6 --max-parents 3 --seed 42 -o \"" +
                  rnd1 + "\"")
              .status == 0);
    CHECK(run_cli("generate --family random --n 5 --t 6 --max-parents 3 --seed 42 -o \"" +
                  rnd2 + "\"")
              .status == 0);
    CHECK(slurp(rnd1) == slurp(rnd2));

    // inapplicable flags are rejected
    const CmdResult bad =
        run_cli("generate --family copy-parent --n 4 --seed 1 -o \"" + rnd2 + "\"");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("does not apply") != std::string::npos);
}

TEST_CASE("solve prints the objective per algorithm") {
    const std::string in = " -i \"" + t23_path() + "\"";
    CHECK(run_cli("solve --algorithm exact-union" + in).out == "objective=4\n");
    CHECK(run_cli("solve --algorithm trivial" + in).out == "objective=6\n");
    CHECK(run_cli("solve --algorithm alg1" + in).out == "objective=4\n");
    CHECK(run_cli("solve --algorithm exhaustive" + in).out == "objective=4\n");
    CHECK(run_cli("solve --algorithm fixed-parent --parents 0,1" + in).out == "objective=4\n");
    CHECK(run_cli("solve --algorithm fixed-parent --parents ''" + in).out == "objective=4\n");
    CHECK(run_cli("solve --algorithm exhaustive --parents 0" + in).out == "objective=4\n");

    CHECK(run_cli("solve --algorithm fixed-parent" + in).status == 1);
    CHECK(run_cli("solve --algorithm trivial --parents 0" + in).status == 1);
    CHECK(run_cli("solve --algorithm fixed-parent --parents 0,0" + in).status == 1);
    CHECK(run_cli("solve --algorithm fixed-parent --parents 7" + in).status == 1);
    CHECK(run_cli("solve --algorithm fixed-parent --parents x" + in).status == 1);
    CHECK(run_cli("solve --algorithm nope" + in).status == 1); // not in the tag set
}

TEST_CASE("solve reports round-trip through eval") {
    const std::string rep = (work_dir() / "report.json").string();
    const CmdResult r = run_cli("solve --algorithm exact-union -i \"" + t23_path() +
                                "\" -o \"" + rep + "\"");
    REQUIRE(r.status == 0);

    const nlohmann::json j = nlohmann::json::parse(slurp(rep));
    CHECK(j.at("algorithm") == "exact-union");
    CHECK(j.at("objective") == 4);
    CHECK(j.at("chosen_parents") == nlohmann::json({0, 1}));
    CHECK(j.at("per_input") == nlohmann::json({1, 1, 1, 1}));
    CHECK(j.at("cpt").at("parents").empty());
    CHECK(j.at("cpt").at("rules").at("") == "0>1");
    CHECK(j.at("wall_time_ms").is_number());

    const CmdResult ev = run_cli("eval -i \"" + t23_path() + "\" -c \"" + rep + "\"");
    CHECK(ev.status == 0);
    CHECK(ev.out == "objective=4\nper_input=1,1,1,1\n");

    // a bare CPT object evaluates the same way
    const std::string cand = (work_dir() / "cand.json").string();
    spit(cand, R"({"parents": [], "rules": {"": "1>0"}})");
    const CmdResult ev2 = run_cli("eval -i \"" + t23_path() + "\" -c \"" + cand + "\"");
    CHECK(ev2.status == 0);
    CHECK(ev2.out == "objective=12\nper_input=3,3,3,3\n");
}

TEST_CASE("matrix prints rows, totals, and the configuration histogram") {
    const CmdResult r = run_cli("matrix -i \"" + t23_path() + "\"");
    CHECK(r.status == 0);
    const char* golden =
        "o[{V1,V2}]  N_1  N_2  N_3  N_4\n"
        "        00    1    0    0    0\n"
        "        01    0    1    0    0\n"
        "        10    0    0    1    0\n"
        "        11    0    0    0    1\n"
        "freq: zeros=12 ones=4\n"
        "configurations: 4 distinct\n"
        "  1000 x 1\n"
        "  0100 x 1\n"
        "  0010 x 1\n"
        "  0001 x 1\n";
    CHECK(r.out == golden);
}

TEST_CASE("exit codes distinguish validation, io, and resource errors") {
    const std::string in = " -i \"" + t23_path() + "\"";

    const CmdResult io = run_cli("solve --algorithm trivial -i /nonexistent/x.json");
    CHECK(io.status == 2);
    CHECK(io.out.find("error: cannot read") != std::string::npos);

    const std::string bad = (work_dir() / "bad.json").string();
    spit(bad, R"({"n": 3, "cpts": [{"parents": [0], "rules": {"0": "0>1"}}]})");
    const CmdResult incomplete = run_cli("solve --algorithm trivial -i \"" + bad + "\"");
    CHECK(incomplete.status == 1);
    CHECK(incomplete.out.find("incomplete CPT") != std::string::npos);

    const std::string dup = (work_dir() / "dup.json").string();
    spit(dup, R"({"n": 3, "cpts": [{"parents": [0], "rules": {"0": "0>1", "0": "1>0"}}]})");
    const CmdResult dupr = run_cli("eval -i \"" + dup + "\" -c \"" + dup + "\"");
    CHECK(dupr.status == 1);
    CHECK(dupr.out.find("duplicate key") != std::string::npos);

    // guard overrides work after the subcommand name and trip exit 3
    const CmdResult mguard = run_cli("matrix" + in + " --max-matrix-n 2");
    CHECK(mguard.status == 3);
    CHECK(mguard.out.find("error:") != std::string::npos);
    CHECK(run_cli("solve --algorithm exhaustive --max-exhaustive-pool 1" + in).status == 3);
    CHECK(run_cli("--max-parent-bits 1 solve --algorithm fixed-parent --parents 0,1" + in)
              .status == 3);

    CHECK(run_cli("").status == 1);             // a subcommand is required
    CHECK(run_cli("generate --family tkn --n 3 --k 2").status == 1); // missing -o
    const CmdResult help = run_cli("--help");
    CHECK(help.status == 0);
    CHECK(help.out.find("generate") != std::string::npos);
}

TEST_CASE("report writes the experiment csv") {
    const std::string csv = (work_dir() / "tkn.csv").string();
    const CmdResult r = run_cli("report --family tkn --n-min 3 --n-max 4 -o \"" + csv + "\"");
    CHECK(r.status == 0);
    CHECK(r.out == "rows=3 out=" + csv + "\n");
    const char* golden =
        "# schema=1\n"
        "family,n,k,t,f_opt,f_trivial,f_alg1,ratio_trivial_num,ratio_trivial_den,"
        "ratio_alg1_num,ratio_alg1_den,formula_opt,formula_input\n"
        "tkn,3,2,4,4,6,4,3,2,1,1,4,6\n"
        "tkn,4,2,12,24,36,24,3,2,1,1,24,36\n"
        "tkn,4,3,8,8,14,8,7,4,1,1,8,14\n";
    CHECK(slurp(csv) == golden);

    const std::string csv2 = (work_dir() / "sym.csv").string();
    const CmdResult sym = run_cli(
        "report --family symmetric-disjoint --t 3 --n-max 5 --seed 2 -o \"" + csv2 + "\"");
    CHECK(sym.status == 0);
    CHECK(sym.out == "rows=2 out=" + csv2 + "\n");
    CHECK(slurp(csv2).find("symmetric-disjoint,4,,3,6,8,8,4,3,4,3,6,8\n") != std::string::npos);

    // conflicting range flags
    CHECK(run_cli("report --family tkn --n 4 --n-min 3 -o \"" + csv + "\"").status == 1);
    CHECK(run_cli("report --family tkn --n 4 --t 2 --t-min 1 -o \"" + csv + "\"").status == 1);
    // unwritable output path is an io error
    CHECK(run_cli("report --family tkn --n 4 -o /nonexistent/dir/x.csv").status == 2);
}
