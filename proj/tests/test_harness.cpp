#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knodel/sweep.hpp"
#include "knodel/verify.hpp"

using namespace knodel;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

// Drops the trailing millis column, the only part outside the determinism
// contract.
std::string strip_timing(const std::string& csv) {
    std::string out;
    for (const std::string& line : lines_of(csv))
        out += line.substr(0, line.rfind(',')) + "\n";
    return out;
}

std::string sweep_to_string(SweepOptions options) {
    std::ostringstream out;
    run_sweep(options, out);
    return out.str();
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string command =
        (env.empty() ? "" : env + " ") + std::string(KNODEL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("sweep rows carry solver, formula, and verdict columns") {
    SweepRow row = compute_sweep_row(3, 12, DeletionMode::All, {});
    CHECK(row.gamma_solver == 4);
    CHECK(row.gamma_formula == 4);
    CHECK(row.gamma_deleted == 3);
    CHECK(row.verdict_solver == Verdict::Critical);
    CHECK(row.verdict_theorem == Verdict::Critical);
    CHECK(row.agree_gamma == true);
    CHECK(row.agree_verdict == true);

    SweepRow bare = compute_sweep_row(2, 12, DeletionMode::All, {});
    CHECK_FALSE(bare.gamma_formula.has_value());
    CHECK_FALSE(bare.verdict_theorem.has_value());
    CHECK_FALSE(bare.agree_gamma.has_value());
}

TEST_CASE("csv sweep output") {
    SweepOptions options;
    options.delta = 3;
    options.n_min = 8;
    options.n_max = 24;
    std::string csv = sweep_to_string(options);
    std::vector<std::string> lines = lines_of(csv);
    REQUIRE(lines.size() == 10);  // header + 9 rows
    CHECK(lines[0] ==
          "delta,n,gamma_solver,gamma_formula,gamma_deleted,verdict_solver,verdict_theorem,"
          "agree_gamma,agree_verdict,nodes,millis");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CAPTURE(lines[i]);
        CHECK(lines[i].find(",true,true,") != std::string::npos);
    }
    CHECK(lines[3].rfind("3,12,4,4,3,Critical,Critical", 0) == 0);
}

TEST_CASE("sweep output is identical across runs and worker counts") {
    SweepOptions options;
    options.delta = 4;
    options.n_min = 16;
    options.n_max = 30;

    options.jobs = 1;
    std::string serial = sweep_to_string(options);
    std::string serial_again = sweep_to_string(options);
    options.jobs = 4;
    std::string threaded = sweep_to_string(options);

    CHECK(strip_timing(serial) == strip_timing(serial_again));
    CHECK(strip_timing(serial) == strip_timing(threaded));
}

TEST_CASE("delta=4 sweep reproduces the verdict run") {
    SweepOptions options;
    options.delta = 4;
    options.n_min = 16;
    options.n_max = 26;
    std::vector<std::string> lines = lines_of(sweep_to_string(options));
    REQUIRE(lines.size() == 7);
    const char* expected[] = {"Stable", "Stable", "Stable", "Critical", "Stable", "Critical"};
    for (int i = 0; i < 6; ++i) {
        CAPTURE(lines[std::size_t(i) + 1]);
        CHECK(lines[std::size_t(i) + 1].find("," + std::string(expected[i]) + "," +
                                             expected[i] + ",") != std::string::npos);
    }
}

TEST_CASE("jsonl sweep output") {
    SweepOptions options;
    options.delta = 2;
    options.n_min = 8;
    options.n_max = 12;
    options.format = SweepFormat::Jsonl;
    std::vector<std::string> lines = lines_of(sweep_to_string(options));
    REQUIRE(lines.size() == 3);
    for (const std::string& line : lines) {
        auto doc = nlohmann::json::parse(line);
        CHECK(doc["delta"] == 2);
        CHECK(doc["gamma_formula"].is_null());
        CHECK(doc["verdict_theorem"].is_null());
        CHECK(doc["gamma_solver"].is_number_integer());
    }
}

TEST_CASE("empty sweep range emits only the header") {
    SweepOptions options;
    options.delta = 3;
    options.n_min = 30;
    options.n_max = 20;
    CHECK(lines_of(sweep_to_string(options)).size() == 1);
}

TEST_CASE("sweep aborts on invalid parameters naming the offender") {
    SweepOptions options;
    options.delta = 4;
    options.n_min = 8;
    options.n_max = 20;
    CHECK_THROWS_WITH_AS(sweep_to_string(options), doctest::Contains("n=8"),
                         std::runtime_error);
}

TEST_CASE("sweep aborts on budget overrun naming the offender") {
    SweepOptions options;
    options.delta = 3;
    options.n_min = 8;
    options.n_max = 12;
    options.solve.node_budget = 1;
    CHECK_THROWS_WITH_AS(sweep_to_string(options), doctest::Contains("n=8"),
                         std::runtime_error);
}

TEST_CASE("verify suite bundles") {
    for (const auto& rep : run_verify_suite("constructions")) {
        CHECK(rep.ok());
        CHECK(rep.cases > 0);
    }
    CHECK_THROWS_AS(run_verify_suite("everything"), std::invalid_argument);
}

TEST_CASE("cli: gen") {
    CliResult dimacs = run_cli("gen --delta 3 --n 8 --format dimacs");
    CHECK(dimacs.exit_code == 0);
    CHECK(dimacs.output.rfind("p edge 8 12\n", 0) == 0);

    CliResult json = run_cli("gen --delta 4 --n 16 --format json");
    CHECK(json.exit_code == 0);
    CHECK(nlohmann::json::parse(json.output)["edges"].size() == 32);

    CliResult bad = run_cli("gen --delta 5 --n 16");
    CHECK(bad.exit_code != 0);
    CHECK(bad.output.find("floor(log2(n))") != std::string::npos);
}

TEST_CASE("cli: gamma") {
    CliResult r = run_cli("gamma --delta 3 --n 12 --delete v1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("W(3,12): gamma=4") != std::string::npos);
    CHECK(r.output.find("W(3,12)-v1: gamma=3") != std::string::npos);

    CliResult big = run_cli("gamma --delta 4 --n 46");
    CHECK(big.exit_code == 0);
    CHECK(big.output.find("W(4,46): gamma=11") != std::string::npos);

    CHECK(run_cli("gamma --delta 3 --n 12 --delete w9").exit_code != 0);
    CHECK(run_cli("gamma --delta 3 --n 7").exit_code != 0);
}

TEST_CASE("cli: classify") {
    CliResult crit = run_cli("classify --delta 3 --n 20");
    CHECK(crit.exit_code == 0);
    CHECK(crit.output.find("verdict=Critical predicted=Critical agree=true") !=
          std::string::npos);

    CliResult stable = run_cli("classify --delta 4 --n 40");
    CHECK(stable.exit_code == 0);
    CHECK(stable.output.find("verdict=Stable predicted=Stable agree=true") !=
          std::string::npos);
    CHECK(stable.output.find("mode=representative") != std::string::npos);

    CliResult plain = run_cli("classify --delta 2 --n 12");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("verdict=Stable") != std::string::npos);
    CHECK(plain.output.find("predicted") == std::string::npos);
}

TEST_CASE("cli: node budget from the environment") {
    CHECK(run_cli("gamma --delta 3 --n 12").exit_code == 0);

    CliResult limited = run_cli("gamma --delta 3 --n 12", "KNODEL_NODE_BUDGET=1");
    CHECK(limited.exit_code != 0);
    CHECK(limited.output.find("budget") != std::string::npos);

    CHECK(run_cli("gamma --delta 3 --n 12", "KNODEL_NODE_BUDGET=abc").exit_code != 0);
}

TEST_CASE("cli: verify exits zero on success") {
    CliResult r = run_cli("verify --suite constructions");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0 failed") != std::string::npos);
}
