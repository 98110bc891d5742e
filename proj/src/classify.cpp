#include "knodel/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace knodel {

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Critical: return "Critical";
        case Verdict::Stable: return "Stable";
        case Verdict::Mixed: return "Mixed";
    }
    return "?";
}

bool DeletionProfile::all_equal() const {
    return min_value() == max_value();
}

int DeletionProfile::min_value() const {
    return std::min(*std::min_element(u_gamma.begin(), u_gamma.end()),
                    *std::min_element(v_gamma.begin(), v_gamma.end()));
}

int DeletionProfile::max_value() const {
    return std::max(*std::max_element(u_gamma.begin(), u_gamma.end()),
                    *std::max_element(v_gamma.begin(), v_gamma.end()));
}

DeletionProfile deletion_profile(const KnodelGraph& g, DeletionMode mode,
                                 const SolveOptions& opt) {
    GammaResult base = exact_gamma(g, opt);

    DeletionProfile profile;
    profile.base_gamma = base.gamma;
    profile.total_nodes = base.nodes_explored;
    profile.u_gamma.assign(std::size_t(g.half()), 0);
    profile.v_gamma.assign(std::size_t(g.half()), 0);

    DeletionMode resolved = mode;
    if (resolved == DeletionMode::Auto)
        resolved = g.order() <= 32 ? DeletionMode::All : DeletionMode::Representative;

    if (resolved == DeletionMode::Representative) {
        GammaResult rep = gamma_after_deletion(g, v(1), opt);
        profile.total_nodes += rep.nodes_explored;
        std::fill(profile.u_gamma.begin(), profile.u_gamma.end(), rep.gamma);
        std::fill(profile.v_gamma.begin(), profile.v_gamma.end(), rep.gamma);
    } else {
        for (int i = 1; i <= g.half(); ++i) {
            GammaResult ru = gamma_after_deletion(g, u(i), opt);
            GammaResult rv = gamma_after_deletion(g, v(i), opt);
            profile.total_nodes += ru.nodes_explored + rv.nodes_explored;
            profile.u_gamma[std::size_t(i) - 1] = ru.gamma;
            profile.v_gamma[std::size_t(i) - 1] = rv.gamma;
        }
    }

    // Deleting one vertex moves gamma by at most one on these graphs;
    // anything else means the search contradicted itself.
    if (profile.min_value() < base.gamma - 1 || profile.max_value() > base.gamma)
        throw std::logic_error("solver consistency failure: a deletion value left {gamma-1, gamma}");
    return profile;
}

Classification classify(const KnodelGraph& g, DeletionMode mode, const SolveOptions& opt) {
    DeletionProfile profile = deletion_profile(g, mode, opt);
    Verdict verdict;
    if (profile.max_value() < profile.base_gamma)
        verdict = Verdict::Critical;
    else if (profile.min_value() == profile.base_gamma)
        verdict = Verdict::Stable;
    else
        verdict = Verdict::Mixed;
    return {verdict, std::move(profile)};
}

}  // namespace knodel
