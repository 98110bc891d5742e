#include "knodel/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace knodel {

namespace {

// d = 2^a - 2^b for some 0 <= b < a < delta? Each pair gives a distinct value.
bool is_offset_difference(int d, int delta) {
    for (int a = 1; a < delta; ++a)
        for (int b = 0; b < a; ++b)
            if ((std::int64_t{1} << a) - (std::int64_t{1} << b) == d) return true;
    return false;
}

}  // namespace

std::vector<int> offset_difference_set(int delta) {
    if (delta < 2)
        throw std::invalid_argument("offset difference set needs delta >= 2, got " +
                                    std::to_string(delta));
    std::vector<int> out;
    for (int a = 1; a < delta; ++a)
        for (int b = 0; b < a; ++b) out.push_back((1 << a) - (1 << b));
    std::sort(out.begin(), out.end());
    return out;
}

CyclicSequence cyclic_sequence(const VertexSet& subset) {
    if (subset.empty()) throw std::invalid_argument("cyclic sequence of an empty subset");
    if (subset.u_bits().any() && subset.v_bits().any())
        throw std::invalid_argument("cyclic sequence needs a one-sided subset");
    const Bitset& bits = subset.u_bits().any() ? subset.u_bits() : subset.v_bits();
    int half = subset.half();

    CyclicSequence seq;
    bits.for_each([&](int r) { seq.source_indices.push_back(r + 1); });
    std::size_t k = seq.source_indices.size();
    seq.diffs.resize(k);
    for (std::size_t j = 0; j + 1 < k; ++j)
        seq.diffs[j] = seq.source_indices[j + 1] - seq.source_indices[j];
    seq.diffs[k - 1] = half + seq.source_indices.front() - seq.source_indices.back();
    return seq;
}

int index_distance(int half, VertexId a, VertexId b) {
    if (a.side != b.side)
        throw std::invalid_argument("index distance needs two same-side vertices");
    if (a.index == b.index)
        throw std::invalid_argument("index distance needs two distinct vertices");
    if (a.index < 1 || a.index > half || b.index < 1 || b.index > half)
        throw std::out_of_range("vertex index outside 1.." + std::to_string(half));
    int d = a.index > b.index ? a.index - b.index : b.index - a.index;
    return d < half - d ? d : half - d;
}

bool neighborhoods_intersect_closed_form(const KnodelGraph& g, VertexId a, VertexId b) {
    if (g.delta() < 2)
        throw std::invalid_argument("closed-form intersection test needs delta >= 2");
    int id = index_distance(g.half(), a, b);
    return is_offset_difference(id, g.delta()) ||
           is_offset_difference(g.half() - id, g.delta());
}

}  // namespace knodel
