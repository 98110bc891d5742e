#pragma once

#include <string>
#include <vector>

#include "knodel/solver.hpp"

namespace knodel {

struct VerificationReport {
    std::string suite;
    long cases = 0;
    long passed = 0;
    long failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
    void pass() { ++cases, ++passed; }
    void fail(const std::string& detail) {
        ++cases, ++failed;
        if (first_failure.empty()) first_failure = detail;
    }
    void check(bool condition, const std::string& detail) {
        condition ? pass() : fail(detail);
    }
};

// Every vertex of every valid graph with delta <= max_delta, n <= max_n has
// degree exactly delta.
VerificationReport verify_regularity(int max_delta, int max_n);

// The arithmetic shared-neighbor predicate agrees with direct neighborhood
// intersection for every same-side pair, exhaustively, 2 <= delta <= max_delta.
VerificationReport verify_shared_neighbor_closed_form(int max_delta, int max_n);

// Random one-sided subsets: circular gaps sum to half, and every pairwise
// index distance splits the gap sequence into two complementary runs.
VerificationReport verify_cyclic_gaps(int samples_per_graph, unsigned seed);

// Random nonempty A ⊆ U: the number of gaps falling in the offset difference
// set never exceeds delta*|A| - |N(A)|.
VerificationReport verify_gap_membership_bound(const std::vector<int>& deltas,
                                               const std::vector<int>& orders,
                                               int samples_per_graph, unsigned seed);

// Every translation and every reflection maps the edge set onto itself,
// exhaustively over all parameters, for every valid graph with n <= max_n.
VerificationReport verify_automorphisms(int max_delta, int max_n);

// The explicit witness sets dominate their v_1-deleted graphs at size
// gamma - 1 (for the patterns that claim to), and the size audit of the
// 10t+8 pattern flags its off-by-one.
VerificationReport verify_constructions(int max_t, const SolveOptions& opt = {});

// Solver gamma equals the closed form for every even n in [n_lo, n_hi].
VerificationReport verify_formula_agreement(int delta, int n_lo, int n_hi,
                                            const SolveOptions& opt = {});

// Solver verdict equals the characterization's prediction for every even n in
// [n_lo, n_hi]; on critical instances every deletion value is gamma - 1.
VerificationReport verify_criticality(int delta, int n_lo, int n_hi,
                                      const SolveOptions& opt = {});

// Suite bundles used by the command-line front end:
//   core          regularity, shared-neighbor closed form, cyclic gaps,
//                 gap membership bound, automorphisms
//   constructions witness sets and the size audit
//   criticality   formula and verdict agreement, delta 3 and 4
// Unknown names throw std::invalid_argument.
std::vector<VerificationReport> run_verify_suite(const std::string& name,
                                                 const SolveOptions& opt = {});

}  // namespace knodel
