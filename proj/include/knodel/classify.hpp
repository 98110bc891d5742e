#pragma once

#include <string>
#include <vector>

#include "knodel/solver.hpp"

namespace knodel {

enum class Verdict { Critical, Stable, Mixed };

std::string to_string(Verdict verdict);

enum class DeletionMode {
    Representative,  // solve gamma(G - v_1) once and replicate (sound by vertex transitivity)
    All,             // solve every single-vertex deletion independently
    Auto,            // All for n <= 32, Representative above
};

// gamma(G) together with gamma(G - w) for every vertex w.
struct DeletionProfile {
    int base_gamma = 0;
    std::vector<int> u_gamma;  // u_gamma[i-1] = gamma(G - u_i)
    std::vector<int> v_gamma;
    std::uint64_t total_nodes = 0;  // nodes over the base solve and all deletion solves

    int at(VertexId w) const {
        return (w.side == Side::U ? u_gamma : v_gamma).at(std::size_t(w.index) - 1);
    }
    bool all_equal() const;
    int min_value() const;
    int max_value() const;
};

// Every deletion value must land in {base_gamma - 1, base_gamma}; a value
// outside that bracket means the solver contradicted itself and throws.
DeletionProfile deletion_profile(const KnodelGraph& g, DeletionMode mode = DeletionMode::Auto,
                                 const SolveOptions& opt = {});

struct Classification {
    Verdict verdict;
    DeletionProfile profile;
};

// Critical iff every deletion lowers gamma; Stable iff none does. Mixed is
// impossible on these vertex-transitive graphs, so callers treat it as a
// solver-consistency failure.
Classification classify(const KnodelGraph& g, DeletionMode mode = DeletionMode::Auto,
                        const SolveOptions& opt = {});

}  // namespace knodel
