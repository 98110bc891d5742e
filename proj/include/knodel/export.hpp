#pragma once

#include <iosfwd>

#include "knodel/graph.hpp"

namespace knodel {

// DIMACS edge format: "p edge <n> <m>" then one "e a b" line per edge.
// Vertex ids are 1-based with the U block first: u_i -> i, v_j -> half + j.
// Edges are listed by ascending u index, then ascending v index.
void write_dimacs(std::ostream& os, const KnodelGraph& g);

// {"delta":D,"n":N,"edges":[[a,b],...]} with the same numbering and ordering.
void write_json(std::ostream& os, const KnodelGraph& g);

}  // namespace knodel
