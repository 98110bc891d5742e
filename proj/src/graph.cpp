#include "knodel/graph.hpp"

#include <stdexcept>
#include <string>

namespace knodel {

int floor_log2(int n) {
    int k = -1;
    while (n > 0) {
        n >>= 1;
        ++k;
    }
    return k;
}

int mod_residue(long long x, int m) {
    long long r = x % m;
    if (r < 0) r += m;
    return int(r);
}

int mod_label(long long x, int m) {
    return mod_residue(x - 1, m) + 1;
}

namespace {

void validate(KnodelParams p) {
    if (p.n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(p.n));
    if (p.n % 2 != 0) throw std::invalid_argument("n must be even, got " + std::to_string(p.n));
    if (p.delta < 1)
        throw std::invalid_argument("delta must be at least 1, got " + std::to_string(p.delta));
    if (int limit = floor_log2(p.n); p.delta > limit)
        throw std::invalid_argument("delta must be at most floor(log2(n)) = " +
                                    std::to_string(limit) + " for n = " + std::to_string(p.n) +
                                    ", got " + std::to_string(p.delta));
}

}  // namespace

KnodelGraph::KnodelGraph(KnodelParams params) : params_(params), half_(params.n / 2) {
    validate(params);
    u_rows_.assign(std::size_t(half_), Bitset(half_));
    v_rows_.assign(std::size_t(half_), Bitset(half_));
    // u_i ~ v_j  iff  j = i + 2^k - 1 (mod half). The delta offsets 2^k - 1
    // are distinct modulo half because 2^(delta-1) <= half, so degrees come
    // out exactly delta.
    for (int r = 0; r < half_; ++r) {
        long long offset = 0;  // 2^k - 1
        for (int k = 0; k < params_.delta; ++k, offset = 2 * offset + 1) {
            int s = mod_residue(r + offset, half_);
            u_rows_[std::size_t(r)].set(s);
            v_rows_[std::size_t(s)].set(r);
        }
    }
}

int KnodelGraph::check_index(int i) const {
    if (i < 1 || i > half_)
        throw std::out_of_range("vertex index " + std::to_string(i) + " outside 1.." +
                                std::to_string(half_));
    return i - 1;
}

bool KnodelGraph::adjacent(VertexId a, VertexId b) const {
    check_index(a.index);
    check_index(b.index);
    if (a.side == b.side) return false;
    const VertexId& us = a.side == Side::U ? a : b;
    const VertexId& vs = a.side == Side::U ? b : a;
    return u_rows_[std::size_t(us.index - 1)].test(vs.index - 1);
}

VertexSet KnodelGraph::neighbors(VertexId w) const {
    const Bitset& r = row(w);  // validates the index
    VertexSet out(half_);
    out.bits(w.side == Side::U ? Side::V : Side::U) = r;
    return out;
}

KnodelGraph build_graph(KnodelParams params) {
    return KnodelGraph(params);
}

VertexSet neighbors(const KnodelGraph& g, VertexId w) {
    return g.neighbors(w);
}

GraphView::GraphView(const KnodelGraph& g, VertexId deleted) : g_(&g), deleted_(deleted) {
    if (!g.valid(deleted))
        throw std::out_of_range("deleted vertex index " + std::to_string(deleted.index) +
                                " outside 1.." + std::to_string(g.half()));
}

VertexSet GraphView::neighbors(VertexId w) const {
    if (deleted_ && *deleted_ == w)
        throw std::invalid_argument("vertex " + to_string(w) + " is deleted from this view");
    VertexSet out = g_->neighbors(w);
    if (deleted_ && deleted_->side != w.side) out.erase(*deleted_);
    return out;
}

VertexSet GraphView::universe() const {
    VertexSet out(g_->half());
    out.u_bits().fill();
    out.v_bits().fill();
    if (deleted_) out.erase(*deleted_);
    return out;
}

GraphView deleted_view(const KnodelGraph& g, VertexId w) {
    return GraphView(g, w);
}

}  // namespace knodel
