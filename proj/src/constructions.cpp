#include "knodel/constructions.hpp"

#include <stdexcept>
#include <string>

namespace knodel {

namespace {

ConstructionWitness make(int target_n, int claimed_size) {
    ConstructionWitness w;
    w.target_n = target_n;
    w.deleted_vertex = v(1);
    w.claimed_size = claimed_size;
    w.set = VertexSet(target_n / 2);
    return w;
}

}  // namespace

ConstructionWitness w3_critical_witness(int t) {
    if (t < 1) throw std::invalid_argument("pattern needs t >= 1 (n = 8t+4)");
    ConstructionWitness w = make(8 * t + 4, 2 * t + 1);
    for (int i = 1; i <= t; ++i) w.set.insert(u(4 * i - 2));
    for (int i = 1; i <= t; ++i) w.set.insert(v(4 * i));
    w.set.insert(v(4 * t + 2));
    return w;
}

ConstructionWitness w4_order26_witness() {
    ConstructionWitness w = make(26, 6);
    for (int i : {2, 10}) w.set.insert(u(i));
    for (int j : {6, 7, 8, 12}) w.set.insert(v(j));
    return w;
}

ConstructionWitness w4_mod2_witness(int t) {
    if (t < 2) throw std::invalid_argument("pattern needs t >= 2 (n = 10t+2)");
    ConstructionWitness w = make(10 * t + 2, 2 * t + 1);
    for (int i = 1; i <= t - 1; ++i) w.set.insert(u(5 * i - 1));
    w.set.insert(u(5 * t));
    for (int i = 1; i <= t; ++i) w.set.insert(v(5 * i - 2));
    w.set.insert(v(5 * t - 1));
    return w;
}

ConstructionWitness w4_mod8_witness(int t) {
    if (t < 3) throw std::invalid_argument("pattern needs t >= 3 (n = 10t+8)");
    ConstructionWitness w = make(10 * t + 8, 2 * t + 3);
    for (int i = 1; i <= t; ++i) w.set.insert(u(5 * i - 1));
    w.set.insert(u(5 * t));
    for (int i = 1; i <= t + 1; ++i) w.set.insert(v(5 * i - 2));
    w.set.insert(v(6));
    w.set.insert(v(5 * t - 1));
    return w;
}

}  // namespace knodel
