// Command-line front end: graph export, exact domination numbers, verdict
// classification, sweeps, and the self-verification suites.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "knodel/classify.hpp"
#include "knodel/export.hpp"
#include "knodel/formulas.hpp"
#include "knodel/solver.hpp"
#include "knodel/sweep.hpp"
#include "knodel/verify.hpp"

namespace {

using namespace knodel;

std::string graph_tag(int delta, int n) {
    return "W(" + std::to_string(delta) + "," + std::to_string(n) + ")";
}

DeletionMode parse_mode(const std::string& text) {
    if (text == "representative") return DeletionMode::Representative;
    if (text == "all") return DeletionMode::All;
    return DeletionMode::Auto;
}

const char* mode_name(DeletionMode mode, int n) {
    if (mode == DeletionMode::Auto)
        mode = n <= 32 ? DeletionMode::All : DeletionMode::Representative;
    return mode == DeletionMode::All ? "all" : "representative";
}

void print_result(const std::string& label, const GammaResult& r) {
    std::cout << label << ": gamma=" << r.gamma << " witness=" << r.witness.to_string()
              << " nodes=" << r.nodes_explored << " millis=" << r.elapsed.count() / 1000.0
              << "\n";
}

int run_gamma(int delta, int n, const std::string& delete_spec, const SolveOptions& opt) {
    KnodelGraph g = build_graph({delta, n});
    print_result(graph_tag(delta, n), exact_gamma(g, opt));
    if (!delete_spec.empty()) {
        auto w = parse_vertex(delete_spec);
        if (!w) {
            std::cerr << "error: bad vertex '" << delete_spec << "'; expected u<k> or v<k>\n";
            return 1;
        }
        print_result(graph_tag(delta, n) + "-" + to_string(*w),
                     gamma_after_deletion(g, *w, opt));
    }
    return 0;
}

int run_classify(int delta, int n, const std::string& mode_spec, const SolveOptions& opt) {
    KnodelGraph g = build_graph({delta, n});
    Classification cls = classify(g, parse_mode(mode_spec), opt);

    std::cout << graph_tag(delta, n) << ": verdict=" << to_string(cls.verdict);
    if (auto crit = predicted_critical(delta, n)) {
        Verdict predicted = *crit ? Verdict::Critical : Verdict::Stable;
        std::cout << " predicted=" << to_string(predicted)
                  << " agree=" << (predicted == cls.verdict ? "true" : "false");
    }
    std::cout << " gamma=" << cls.profile.base_gamma
              << " gamma_deleted=" << cls.profile.at(v(1))
              << " mode=" << mode_name(parse_mode(mode_spec), n) << "\n";

    if (cls.verdict == Verdict::Mixed) {
        std::cerr << "error: mixed deletion profile on a vertex-transitive graph; "
                     "solver consistency failure\n";
        return 1;
    }
    if (auto crit = predicted_critical(delta, n);
        crit && (*crit ? Verdict::Critical : Verdict::Stable) != cls.verdict) {
        std::cerr << "error: solver verdict disagrees with the characterization\n";
        return 1;
    }
    return 0;
}

int run_verify(const std::string& suite, const SolveOptions& opt) {
    auto reports = run_verify_suite(suite, opt);
    long failures = 0;
    for (const auto& rep : reports) {
        std::cout << "suite " << rep.suite << ": " << rep.cases << " cases, " << rep.passed
                  << " passed, " << rep.failed << " failed\n";
        if (!rep.ok()) std::cout << "  first failure: " << rep.first_failure << "\n";
        failures += rep.failed;
    }
    std::cout << (failures == 0 ? "verify: all suites passed\n"
                                : "verify: " + std::to_string(failures) + " failures\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knödel graph domination toolkit"};
    app.require_subcommand(1);

    SolveOptions solve;
    if (const char* env = std::getenv("KNODEL_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || parsed == 0) {
            std::cerr << "error: KNODEL_NODE_BUDGET must be a positive integer\n";
            return 1;
        }
        solve.node_budget = parsed;
    }

    int delta = 0, n = 0, n_min = 0, n_max = 0, jobs = 0;
    std::string format = "dimacs", delete_spec, mode_spec = "auto", out_format = "csv",
                suite = "all";

    CLI::App* gen = app.add_subcommand("gen", "Emit a graph in DIMACS or JSON form");
    gen->add_option("--delta", delta, "degree")->required();
    gen->add_option("--n", n, "order (even)")->required();
    gen->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"dimacs", "json"}));

    CLI::App* gamma = app.add_subcommand("gamma", "Exact domination number");
    gamma->add_option("--delta", delta, "degree")->required();
    gamma->add_option("--n", n, "order (even)")->required();
    gamma->add_option("--delete", delete_spec, "also solve with this vertex removed (u<k>/v<k>)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "Critical/stable verdict");
    classify_cmd->add_option("--delta", delta, "degree")->required();
    classify_cmd->add_option("--n", n, "order (even)")->required();
    classify_cmd->add_option("--mode", mode_spec, "deletion mode")
        ->check(CLI::IsMember({"representative", "all", "auto"}));

    CLI::App* sweep = app.add_subcommand("sweep", "One report row per even order in a range");
    sweep->add_option("--delta", delta, "degree")->required();
    sweep->add_option("--min", n_min, "smallest order")->required();
    sweep->add_option("--max", n_max, "largest order")->required();
    sweep->add_option("--out", out_format, "row format")->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_option("--mode", mode_spec, "deletion mode")
        ->check(CLI::IsMember({"representative", "all", "auto"}));
    sweep->add_option("--jobs", jobs, "worker threads (0 = one per hardware thread)");

    CLI::App* verify = app.add_subcommand("verify", "Run the self-verification suites");
    verify->add_option("--suite", suite, "core|constructions|criticality|all")
        ->check(CLI::IsMember({"core", "constructions", "criticality", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            KnodelGraph g = build_graph({delta, n});
            if (format == "dimacs")
                write_dimacs(std::cout, g);
            else
                write_json(std::cout, g);
            return 0;
        }
        if (gamma->parsed()) return run_gamma(delta, n, delete_spec, solve);
        if (classify_cmd->parsed()) return run_classify(delta, n, mode_spec, solve);
        if (sweep->parsed()) {
            SweepOptions options;
            options.delta = delta;
            options.n_min = n_min;
            options.n_max = n_max;
            options.format = out_format == "csv" ? SweepFormat::Csv : SweepFormat::Jsonl;
            options.mode = parse_mode(mode_spec);
            options.jobs = jobs;
            options.solve = solve;
            run_sweep(options, std::cout);
            return 0;
        }
        if (verify->parsed()) return run_verify(suite, solve);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
