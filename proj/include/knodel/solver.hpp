#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "knodel/graph.hpp"

namespace knodel {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolveOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
};

// Thrown when a search exceeds its node budget. Never downgraded to a
// heuristic answer.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(std::uint64_t budget)
        : std::runtime_error("node budget of " + std::to_string(budget) + " exceeded"),
          budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

// Exact domination number with a witness set and search statistics.
struct GammaResult {
    int gamma = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
};

// True iff every non-deleted vertex is in d or adjacent to a member of d.
// Members dominate themselves (closed-neighborhood convention). A d that
// contains the deleted vertex is rejected.
bool is_dominating(const GraphView& view, const VertexSet& d);

// Dominating set built by repeatedly taking the vertex that covers the most
// currently-undominated vertices; ties go to side U first, then lowest index.
VertexSet greedy_upper_bound(const GraphView& view);

// Exact minimum dominating set by branch and bound:
//   - incumbent seeded from greedy_upper_bound,
//   - prune when |chosen| + ceil(undominated/(delta+1)) cannot beat it,
//   - branch on an undominated vertex with the fewest live dominators,
//     trying its closed-neighborhood candidates in ascending (side, index)
//     order; a single live dominator is taken without branching.
// The fixed order makes gamma, witness, and node count reproducible.
GammaResult exact_gamma(const GraphView& view, const SolveOptions& opt = {});
GammaResult exact_gamma(const KnodelGraph& g, const SolveOptions& opt = {});

GammaResult gamma_after_deletion(const KnodelGraph& g, VertexId w,
                                 const SolveOptions& opt = {});

// { x outside d : N(x) ∩ d = {member} }. member must belong to d.
VertexSet external_private_neighbors(const GraphView& view, const VertexSet& d,
                                     VertexId member);

}  // namespace knodel
