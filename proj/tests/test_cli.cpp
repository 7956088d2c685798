#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Run the CLI with stdout+stderr captured.
CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPFLUX_CLI_PATH) + " " + args + " 2>&1";
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe))
        res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli: list prints the catalog and exits 0") {
    const auto r = run_cli("list");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("unruh-equivalence") != std::string::npos);
    CHECK(r.output.find("flux-balance-moving") != std::string::npos);
    CHECK(r.output.find("delta-kernel") != std::string::npos);
}

TEST_CASE("cli: run writes deterministic CSV and exits 0 on pass") {
    const std::string out1 = "/tmp/hypflux_cli_test_1.csv";
    const std::string out2 = "/tmp/hypflux_cli_test_2.csv";
    const auto r1 = run_cli("run unruh-equivalence --out " + out1);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("PASS") != std::string::npos);
    const auto r2 = run_cli("run unruh-equivalence --out " + out2);
    CHECK(r2.exit_code == 0);

    const auto csv1 = slurp(out1);
    const auto csv2 = slurp(out2);
    CHECK_FALSE(csv1.empty());
    CHECK(csv1 == csv2); // byte-identical
    CHECK(csv1.substr(0, csv1.find('\n')) ==
          "dtau,worldline_corr_diff,thermal_corr_diff,abs_err");
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("cli: json output carries config, rows, and checks") {
    const std::string out = "/tmp/hypflux_cli_test.json";
    const auto r = run_cli(
        "run retarded-time --param draws=25 --format json --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["config"]["experiment"] == "retarded-time");
    CHECK(j["config"]["options"]["draws"] == 25.0);
    CHECK(j["rows"].size() == 25 + 20); // draws + worldline points
    bool all_pass = true;
    for (const auto& c : j["checks"]) all_pass = all_pass && c["pass"].get<bool>();
    CHECK(all_pass);
    std::remove(out.c_str());
}

TEST_CASE("cli: parameter overrides reach the physics") {
    // halving the force halves the Unruh temperature; the equivalence
    // check must still pass
    const auto r =
        run_cli("run unruh-equivalence --param F=0.5 --grid tau=0.5:2:4 "
                "--out /tmp/hypflux_cli_test3.csv");
    CHECK(r.exit_code == 0);
    std::remove("/tmp/hypflux_cli_test3.csv");
}

TEST_CASE("cli: params file is honored") {
    const std::string pf = "/tmp/hypflux_cli_params.json";
    {
        std::ofstream out(pf);
        out << R"({"m": 2.0, "F": 1.5})";
    }
    const auto r = run_cli("run unruh-equivalence --params-file " + pf +
                           " --out /tmp/hypflux_cli_test4.csv");
    CHECK(r.exit_code == 0);
    std::remove(pf.c_str());
    std::remove("/tmp/hypflux_cli_test4.csv");
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli("run does-not-exist").exit_code == 2);
    CHECK(run_cli("run unruh-equivalence --param bogus=1").exit_code == 2);
    CHECK(run_cli("run unruh-equivalence --param m=abc").exit_code == 2);
    CHECK(run_cli("run unruh-equivalence --param m=-2").exit_code == 2);
    CHECK(run_cli("run unruh-equivalence --grid tau=1:2").exit_code == 2);
    CHECK(run_cli("run unruh-equivalence --format yaml").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("run --help").exit_code == 0);
}
