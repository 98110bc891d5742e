#pragma once

#include <iosfwd>
#include <optional>

#include "knodel/classify.hpp"

namespace knodel {

enum class SweepFormat { Csv, Jsonl };

struct SweepOptions {
    int delta = 3;
    int n_min = 0;
    int n_max = -1;  // empty range by default
    SweepFormat format = SweepFormat::Csv;
    DeletionMode mode = DeletionMode::Auto;
    int jobs = 0;  // 0 = one worker per hardware thread, capped at the row count
    SolveOptions solve;
};

struct SweepRow {
    int delta = 0;
    int n = 0;
    int gamma_solver = 0;
    std::optional<int> gamma_formula;
    int gamma_deleted = 0;
    Verdict verdict_solver = Verdict::Mixed;
    std::optional<Verdict> verdict_theorem;
    std::optional<bool> agree_gamma;
    std::optional<bool> agree_verdict;
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

SweepRow compute_sweep_row(int delta, int n, DeletionMode mode, const SolveOptions& opt);

// One row per even n in [n_min, n_max], emitted in ascending n regardless of
// which worker finished first. Apart from the trailing millis column the
// output is byte-identical across runs and worker counts. Any invalid (delta,
// n) combination or budget overrun aborts the whole sweep with the offending
// n named; nothing is emitted in that case.
void run_sweep(const SweepOptions& options, std::ostream& os);

}  // namespace knodel
