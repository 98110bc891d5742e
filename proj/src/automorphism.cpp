#include "knodel/automorphism.hpp"

namespace knodel {

Automorphism automorphism_translate(const KnodelGraph& g, int k) {
    return {Automorphism::Kind::Translate, mod_residue(k, g.half()), g.half()};
}

Automorphism automorphism_reflect(const KnodelGraph& g, int c) {
    return {Automorphism::Kind::Reflect, mod_residue(c, g.half()), g.half()};
}

bool preserves_adjacency(const KnodelGraph& g, const Automorphism& sigma) {
    for (int i = 1; i <= g.half(); ++i) {
        VertexId a = sigma(u(i));
        bool ok = true;
        g.u_row(i).for_each([&](int s) {
            if (!g.adjacent(a, sigma(v(s + 1)))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace knodel
