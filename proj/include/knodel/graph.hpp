#pragma once

#include <optional>
#include <vector>

#include "knodel/vertex.hpp"

namespace knodel {

// Family parameters of W_{delta,n}: n even, n >= 2, 1 <= delta <= floor(log2 n).
struct KnodelParams {
    int delta;
    int n;
};

int floor_log2(int n);

// Reduces x to a residue in [0, m); works for negative x.
int mod_residue(long long x, int m);

// Reduces x to a 1-based label in 1..m (residue 0 maps to m).
int mod_label(long long x, int m);

// The Knödel graph W_{delta,n}: a delta-regular bipartite graph on parts
// U = {u_1..u_{n/2}} and V = {v_1..v_{n/2}}, where u_i ~ v_j exactly when
// j = i + 2^k - 1 (mod n/2) for some k in 0..delta-1.
// Neighborhoods are precomputed as one bitmask per vertex; bit r of a row
// stands for index r+1 on the opposite side.
class KnodelGraph {
public:
    explicit KnodelGraph(KnodelParams params);

    int delta() const { return params_.delta; }
    int order() const { return params_.n; }
    int half() const { return half_; }
    const KnodelParams& params() const { return params_; }

    const Bitset& u_row(int i) const { return u_rows_[check_index(i)]; }
    const Bitset& v_row(int j) const { return v_rows_[check_index(j)]; }
    const Bitset& row(VertexId w) const {
        return w.side == Side::U ? u_row(w.index) : v_row(w.index);
    }

    bool adjacent(VertexId a, VertexId b) const;

    // Open neighborhood as a one-sided VertexSet.
    VertexSet neighbors(VertexId w) const;

    bool valid(VertexId w) const { return w.index >= 1 && w.index <= half_; }

private:
    int check_index(int i) const;

    KnodelParams params_;
    int half_;
    std::vector<Bitset> u_rows_;  // u_rows_[i-1] = N(u_i) over V indices
    std::vector<Bitset> v_rows_;  // v_rows_[j-1] = N(v_j) over U indices
};

// Validates params and constructs the graph; throws std::invalid_argument
// with a distinct message per violated constraint.
KnodelGraph build_graph(KnodelParams params);

VertexSet neighbors(const KnodelGraph& g, VertexId w);

// A graph with at most one vertex logically deleted. Deletion is a mask,
// not a rebuild: the deleted vertex disappears from the universe, from all
// neighborhoods, and from domination requirements.
class GraphView {
public:
    explicit GraphView(const KnodelGraph& g) : g_(&g) {}
    GraphView(const KnodelGraph& g, VertexId deleted);

    const KnodelGraph& graph() const { return *g_; }
    std::optional<VertexId> deleted() const { return deleted_; }

    int vertex_count() const { return g_->order() - (deleted_ ? 1 : 0); }
    bool contains(VertexId w) const { return g_->valid(w) && !(deleted_ && *deleted_ == w); }

    // Open neighborhood within the view; the deleted vertex is not addressable.
    VertexSet neighbors(VertexId w) const;

    // All non-deleted vertices.
    VertexSet universe() const;

private:
    const KnodelGraph* g_;
    std::optional<VertexId> deleted_;
};

GraphView deleted_view(const KnodelGraph& g, VertexId w);

}  // namespace knodel
