#include "knodel/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "knodel/formulas.hpp"

namespace knodel {

namespace {

std::string format_millis(double millis) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", millis);
    return buf;
}

void emit_csv(std::ostream& os, const SweepRow& r) {
    os << r.delta << ',' << r.n << ',' << r.gamma_solver << ',';
    if (r.gamma_formula) os << *r.gamma_formula;
    os << ',' << r.gamma_deleted << ',' << to_string(r.verdict_solver) << ',';
    if (r.verdict_theorem) os << to_string(*r.verdict_theorem);
    os << ',';
    if (r.agree_gamma) os << (*r.agree_gamma ? "true" : "false");
    os << ',';
    if (r.agree_verdict) os << (*r.agree_verdict ? "true" : "false");
    os << ',' << r.nodes << ',' << format_millis(r.millis) << '\n';
}

void emit_jsonl(std::ostream& os, const SweepRow& r) {
    nlohmann::ordered_json doc;
    doc["delta"] = r.delta;
    doc["n"] = r.n;
    doc["gamma_solver"] = r.gamma_solver;
    doc["gamma_formula"] = r.gamma_formula ? nlohmann::ordered_json(*r.gamma_formula)
                                           : nlohmann::ordered_json(nullptr);
    doc["gamma_deleted"] = r.gamma_deleted;
    doc["verdict_solver"] = to_string(r.verdict_solver);
    doc["verdict_theorem"] = r.verdict_theorem ? nlohmann::ordered_json(to_string(*r.verdict_theorem))
                                               : nlohmann::ordered_json(nullptr);
    doc["agree_gamma"] = r.agree_gamma ? nlohmann::ordered_json(*r.agree_gamma)
                                       : nlohmann::ordered_json(nullptr);
    doc["agree_verdict"] = r.agree_verdict ? nlohmann::ordered_json(*r.agree_verdict)
                                           : nlohmann::ordered_json(nullptr);
    doc["nodes"] = r.nodes;
    doc["millis"] = r.millis;
    os << doc.dump() << '\n';
}

}  // namespace

SweepRow compute_sweep_row(int delta, int n, DeletionMode mode, const SolveOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    KnodelGraph g = build_graph({delta, n});
    Classification cls = classify(g, mode, opt);

    SweepRow row;
    row.delta = delta;
    row.n = n;
    row.gamma_solver = cls.profile.base_gamma;
    row.gamma_formula = gamma_formula(delta, n);
    row.gamma_deleted = cls.profile.at(v(1));
    row.verdict_solver = cls.verdict;
    if (auto crit = predicted_critical(delta, n))
        row.verdict_theorem = *crit ? Verdict::Critical : Verdict::Stable;
    if (row.gamma_formula) row.agree_gamma = *row.gamma_formula == row.gamma_solver;
    if (row.verdict_theorem) row.agree_verdict = *row.verdict_theorem == row.verdict_solver;
    row.nodes = cls.profile.total_nodes;
    row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           start)
                     .count();
    return row;
}

void run_sweep(const SweepOptions& options, std::ostream& os) {
    std::vector<int> orders;
    int first = options.n_min + (options.n_min % 2 != 0 ? 1 : 0);
    for (int n = first; n <= options.n_max; n += 2) orders.push_back(n);

    // Fail before emitting anything, naming the first bad order.
    for (int n : orders) {
        try {
            (void)build_graph({options.delta, n});
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep aborted at n=" + std::to_string(n) + ": " + e.what());
        }
    }

    std::vector<SweepRow> rows(orders.size());
    std::vector<std::string> errors(orders.size());
    if (!orders.empty()) {
        unsigned hw = std::thread::hardware_concurrency();
        std::size_t jobs = options.jobs > 0 ? std::size_t(options.jobs) : std::size_t(hw ? hw : 1);
        jobs = std::min(jobs, orders.size());

        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < orders.size(); i = next.fetch_add(1)) {
                try {
                    rows[i] = compute_sweep_row(options.delta, orders[i], options.mode,
                                                options.solve);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < orders.size(); ++i)
            if (!errors[i].empty())
                throw std::runtime_error("sweep aborted at n=" + std::to_string(orders[i]) +
                                         ": " + errors[i]);
    }

    if (options.format == SweepFormat::Csv) {
        os << "delta,n,gamma_solver,gamma_formula,gamma_deleted,verdict_solver,"
              "verdict_theorem,agree_gamma,agree_verdict,nodes,millis\n";
        for (const SweepRow& r : rows) emit_csv(os, r);
    } else {
        for (const SweepRow& r : rows) emit_jsonl(os, r);
    }
}

}  // namespace knodel
