#include <doctest.h>

#include "knodel/constructions.hpp"
#include "knodel/formulas.hpp"
#include "knodel/solver.hpp"

using namespace knodel;

namespace {

VertexSet make_set(int half, std::initializer_list<VertexId> vertices) {
    VertexSet s(half);
    for (VertexId w : vertices) s.insert(w);
    return s;
}

bool dominates_deleted_graph(const ConstructionWitness& w, int delta) {
    KnodelGraph g = build_graph({delta, w.target_n});
    return is_dominating(deleted_view(g, w.deleted_vertex), w.set);
}

}  // namespace

TEST_CASE("8t+4 pattern instantiates as written") {
    ConstructionWitness w1 = w3_critical_witness(1);
    CHECK(w1.target_n == 12);
    CHECK(w1.set == make_set(6, {u(2), v(4), v(6)}));
    CHECK(w1.claimed_size == 3);
    CHECK(w1.claim_matches());

    ConstructionWitness w2 = w3_critical_witness(2);
    CHECK(w2.set == make_set(10, {u(2), u(6), v(4), v(8), v(10)}));
    CHECK(w2.claimed_size == 5);

    CHECK_THROWS_AS(w3_critical_witness(0), std::invalid_argument);
}

TEST_CASE("8t+4 pattern certifies the deletion bound") {
    for (int t = 1; t <= 6; ++t) {
        ConstructionWitness w = w3_critical_witness(t);
        CAPTURE(t);
        CHECK_FALSE(w.set.contains(v(1)));
        CHECK(dominates_deleted_graph(w, 3));
        CHECK(w.actual_size() == gamma_formula_w3(w.target_n) - 1);
    }
}

TEST_CASE("order-26 set") {
    ConstructionWitness w = w4_order26_witness();
    CHECK(w.target_n == 26);
    CHECK(w.set == make_set(13, {u(2), u(10), v(6), v(7), v(8), v(12)}));
    CHECK(w.actual_size() == 6);
    CHECK(w.claim_matches());
    CHECK(dominates_deleted_graph(w, 4));
    CHECK(w.actual_size() == gamma_formula_w4(26) - 1);
}

TEST_CASE("10t+2 pattern certifies the deletion bound") {
    ConstructionWitness w2 = w4_mod2_witness(2);
    CHECK(w2.target_n == 22);
    CHECK(w2.set == make_set(11, {u(4), u(10), v(3), v(8), v(9)}));

    for (int t = 2; t <= 6; ++t) {
        ConstructionWitness w = w4_mod2_witness(t);
        CAPTURE(t);
        CHECK(w.claim_matches());
        CHECK_FALSE(w.set.contains(v(1)));
        CHECK(dominates_deleted_graph(w, 4));
        CHECK(w.actual_size() == gamma_formula_w4(w.target_n) - 1);
    }
    CHECK_THROWS_AS(w4_mod2_witness(1), std::invalid_argument);
}

TEST_CASE("10t+8 pattern is audited rather than trusted") {
    ConstructionWitness w = w4_mod8_witness(3);
    CHECK(w.target_n == 38);
    CHECK(w.set == make_set(19, {u(4), u(9), u(14), u(15), v(3), v(8), v(13), v(18), v(6),
                                 v(14)}));
    CHECK(w.actual_size() == 10);
    CHECK(w.claimed_size == 9);
    CHECK_FALSE(w.claim_matches());

    // The literal set even misses vertices (u_16 and v_19 have no neighbor
    // in it), so the stated bound rests on exact search, which confirms it.
    KnodelGraph g = build_graph({4, 38});
    CHECK_FALSE(is_dominating(deleted_view(g, v(1)), w.set));
    CHECK(gamma_after_deletion(g, v(1)).gamma == 9);

    for (int t = 3; t <= 6; ++t) {
        CAPTURE(t);
        ConstructionWitness wt = w4_mod8_witness(t);
        CHECK(wt.actual_size() == 2 * t + 4);
        CHECK(wt.claimed_size == 2 * t + 3);
        CHECK_FALSE(wt.claim_matches());
    }
    CHECK_THROWS_AS(w4_mod8_witness(2), std::invalid_argument);
}
