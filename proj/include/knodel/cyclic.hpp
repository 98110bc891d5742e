#pragma once

#include <vector>

#include "knodel/graph.hpp"

namespace knodel {

// { 2^a - 2^b : 0 <= b < a < delta }, sorted ascending. Defined for delta >= 2.
std::vector<int> offset_difference_set(int delta);

// The circular gaps of a one-sided subset: for sorted indices i_1 < ... < i_k,
// diffs are i_2-i_1, ..., i_k-i_{k-1}, and half + i_1 - i_k. They sum to half.
struct CyclicSequence {
    std::vector<int> source_indices;
    std::vector<int> diffs;
};

// Requires a nonempty subset lying entirely on one side.
CyclicSequence cyclic_sequence(const VertexSet& subset);

// Circular distance min(|i-j|, half-|i-j|) between two distinct same-side
// vertices; always in 1..floor(half/2).
int index_distance(int half, VertexId a, VertexId b);

// Whether N(a) and N(b) share a vertex, decided arithmetically: true iff
// the index distance or its complement to half lies in the offset difference
// set. Requires delta >= 2 and two distinct same-side vertices.
bool neighborhoods_intersect_closed_form(const KnodelGraph& g, VertexId a, VertexId b);

}  // namespace knodel
