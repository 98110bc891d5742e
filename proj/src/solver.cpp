#include "knodel/solver.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <vector>

namespace knodel {

namespace {

// Search-side picture of a view: vertices flattened to 0..n-1 with the U
// block first, one closed-neighborhood mask per vertex. cover[x] doubles as
// the dominator set of x, since y covers x exactly when x covers y.
struct FlatContext {
    int n;
    int half;
    int delta;
    int deleted = -1;
    Bitset universe;
    std::vector<Bitset> cover;

    explicit FlatContext(const GraphView& view)
        : n(view.graph().order()), half(view.graph().half()), delta(view.graph().delta()) {
        const KnodelGraph& g = view.graph();
        if (auto d = view.deleted())
            deleted = (d->side == Side::U ? 0 : half) + d->index - 1;

        cover.assign(std::size_t(n), Bitset(n));
        for (int r = 0; r < half; ++r) {
            Bitset& cu = cover[std::size_t(r)];
            cu.set(r);
            g.u_row(r + 1).for_each([&](int s) { cu.set(half + s); });
            Bitset& cv = cover[std::size_t(half + r)];
            cv.set(half + r);
            g.v_row(r + 1).for_each([&](int s) { cv.set(s); });
        }
        universe = Bitset(n);
        universe.fill();
        if (deleted >= 0) {
            universe.reset(deleted);
            for (auto& c : cover) c.reset(deleted);
        }
    }

    VertexId unflatten(int x) const { return x < half ? u(x + 1) : v(x - half + 1); }

    VertexSet to_vertex_set(const std::vector<int>& flat) const {
        VertexSet out(half);
        for (int x : flat) out.insert(unflatten(x));
        return out;
    }
};

std::vector<int> greedy_flat(const FlatContext& ctx) {
    Bitset undominated = ctx.universe;
    std::vector<int> picks;
    while (undominated.any()) {
        int best = -1, best_gain = 0;
        ctx.universe.for_each([&](int x) {
            int gain = 0;
            const auto& cw = ctx.cover[std::size_t(x)].words();
            const auto& uw = undominated.words();
            for (std::size_t k = 0; k < cw.size(); ++k)
                gain += std::popcount(cw[k] & uw[k]);
            if (gain > best_gain) {  // strict: ties keep the earliest vertex
                best_gain = gain;
                best = x;
            }
        });
        picks.push_back(best);
        undominated -= ctx.cover[std::size_t(best)];
    }
    return picks;
}

class Searcher {
public:
    Searcher(const FlatContext& ctx, std::uint64_t budget) : ctx_(ctx), budget_(budget) {}

    void run(const std::vector<int>& incumbent) {
        best_ = incumbent;
        best_size_ = int(incumbent.size());
        frames_.assign(std::size_t(best_size_) + 2,
                       Frame{Bitset(ctx_.n), Bitset(ctx_.n), Bitset(ctx_.n), Bitset(ctx_.n), {}});
        chosen_.reserve(std::size_t(best_size_));
        frames_[0].undominated = ctx_.universe;
        dfs(0);
    }

    int best_size() const { return best_size_; }
    const std::vector<int>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct Frame {
        Bitset undominated;
        Bitset excluded;
        Bitset live;
        Bitset packed_union;
        std::vector<int> candidates;
    };

    void dfs(int depth) {
        if (++nodes_ > budget_) throw budget_exceeded(budget_);
        Frame& f = frames_[std::size_t(depth)];

        int undominated = f.undominated.count();
        if (undominated == 0) {
            if (depth < best_size_) {
                best_size_ = depth;
                best_ = chosen_;
            }
            return;
        }
        // Any one vertex dominates at most delta + 1 of the rest.
        if (depth + (undominated + ctx_.delta) / (ctx_.delta + 1) >= best_size_) return;

        // One pass over the undominated vertices finds the most constrained
        // one to branch on and, as a second lower bound, greedily packs
        // vertices whose live dominator sets are pairwise disjoint: each
        // packed vertex costs one new pick. Neither prune can discard a
        // subtree holding a strict improvement, so gamma and witness do not
        // depend on them.
        int branch = -1, live_min = INT_MAX, packing = 0;
        const auto& uw = f.undominated.words();
        f.packed_union.clear();
        for (std::size_t wi = 0; wi < uw.size(); ++wi) {
            std::uint64_t w = uw[wi];
            while (w) {
                int x = int(wi) * 64 + std::countr_zero(w);
                w &= w - 1;
                f.live.assign_and_not(ctx_.cover[std::size_t(x)], f.excluded);
                int live = f.live.count();
                if (live == 0) return;  // x can no longer be dominated
                if (live < live_min) {
                    live_min = live;
                    branch = x;
                }
                if (!f.live.intersects(f.packed_union)) {
                    ++packing;
                    f.packed_union |= f.live;
                }
            }
        }
        if (depth + packing >= best_size_) return;

        // A single live dominator is a forced inclusion; otherwise each
        // candidate is tried and then excluded for its later siblings.
        f.candidates.clear();
        ctx_.cover[std::size_t(branch)].for_each([&](int c) {
            if (!f.excluded.test(c)) f.candidates.push_back(c);
        });
        Frame& child = frames_[std::size_t(depth) + 1];
        for (int c : f.candidates) {
            child.undominated = f.undominated;
            child.undominated -= ctx_.cover[std::size_t(c)];
            child.excluded = f.excluded;
            chosen_.push_back(c);
            dfs(depth + 1);
            chosen_.pop_back();
            f.excluded.set(c);
        }
    }

    const FlatContext& ctx_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int best_size_ = 0;
    std::vector<int> best_;
    std::vector<int> chosen_;
    std::vector<Frame> frames_;
};

}  // namespace

bool is_dominating(const GraphView& view, const VertexSet& d) {
    const KnodelGraph& g = view.graph();
    if (d.half() != g.half())
        throw std::invalid_argument("dominating-set candidate sized for a different graph");
    if (view.deleted() && d.contains(*view.deleted()))
        throw std::invalid_argument("dominating-set candidate contains the deleted vertex " +
                                    to_string(*view.deleted()));

    Bitset covered_u = d.u_bits();
    Bitset covered_v = d.v_bits();
    d.u_bits().for_each([&](int r) { covered_v |= g.u_row(r + 1); });
    d.v_bits().for_each([&](int s) { covered_u |= g.v_row(s + 1); });

    VertexSet need = view.universe();
    return (need.u_bits() - covered_u).none() && (need.v_bits() - covered_v).none();
}

VertexSet greedy_upper_bound(const GraphView& view) {
    FlatContext ctx(view);
    return ctx.to_vertex_set(greedy_flat(ctx));
}

GammaResult exact_gamma(const GraphView& view, const SolveOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    FlatContext ctx(view);
    Searcher searcher(ctx, opt.node_budget);
    searcher.run(greedy_flat(ctx));

    GammaResult result;
    result.gamma = searcher.best_size();
    result.witness = ctx.to_vertex_set(searcher.best());
    result.nodes_explored = searcher.nodes();
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

GammaResult exact_gamma(const KnodelGraph& g, const SolveOptions& opt) {
    return exact_gamma(GraphView(g), opt);
}

GammaResult gamma_after_deletion(const KnodelGraph& g, VertexId w, const SolveOptions& opt) {
    return exact_gamma(deleted_view(g, w), opt);
}

VertexSet external_private_neighbors(const GraphView& view, const VertexSet& d,
                                     VertexId member) {
    const KnodelGraph& g = view.graph();
    if (d.half() != g.half())
        throw std::invalid_argument("set sized for a different graph");
    if (!d.contains(member))
        throw std::invalid_argument("member " + to_string(member) + " is not in the set");
    if (view.deleted() && d.contains(*view.deleted()))
        throw std::invalid_argument("set contains the deleted vertex " +
                                    to_string(*view.deleted()));

    // Only opposite-side vertices can have member as their sole neighbor in d.
    Side opposite = member.side == Side::U ? Side::V : Side::U;
    const Bitset& d_member_side = d.bits(member.side);
    int deleted_here = -1;
    if (view.deleted() && view.deleted()->side == opposite)
        deleted_here = view.deleted()->index - 1;

    VertexSet out(g.half());
    for (int r = 0; r < g.half(); ++r) {
        VertexId x{opposite, r + 1};
        if (r == deleted_here || d.contains(x)) continue;
        Bitset hits = g.row(x) & d_member_side;
        if (hits.count() == 1 && hits.test(member.index - 1)) out.insert(x);
    }
    return out;
}

}  // namespace knodel
