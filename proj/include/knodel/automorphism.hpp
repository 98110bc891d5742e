#pragma once

#include "knodel/graph.hpp"

namespace knodel {

// An adjacency-preserving vertex relabeling. Two kinds cover vertex
// transitivity: index translation within each side, and a side-swapping
// reflection. Composing the two reaches any vertex from any other.
struct Automorphism {
    enum class Kind { Translate, Reflect };

    Kind kind;
    int param;  // translation amount k, or reflection constant c
    int half;

    VertexId operator()(VertexId w) const {
        if (kind == Kind::Translate)
            return {w.side, mod_label(w.index + param, half)};
        return {w.side == Side::U ? Side::V : Side::U, mod_label(param - w.index + 1, half)};
    }
};

// (side, j) -> (side, ((j-1+k) mod half)+1)
Automorphism automorphism_translate(const KnodelGraph& g, int k);

// (U, j) <-> (V, ((c-j) mod half)+1); an involution for fixed c.
Automorphism automorphism_reflect(const KnodelGraph& g, int c);

// Exhaustive check that the image of every edge is an edge.
bool preserves_adjacency(const KnodelGraph& g, const Automorphism& sigma);

}  // namespace knodel
