#pragma once

#include "knodel/vertex.hpp"

namespace knodel {

// An explicit candidate dominating set for W_{delta,n} - v_1, instantiated
// verbatim from its defining index pattern. The recorded claimed_size is the
// size the pattern is stated to have; the actual cardinality is reported
// alongside and a mismatch is flagged, never silently repaired.
struct ConstructionWitness {
    int target_n = 0;
    VertexId deleted_vertex = v(1);
    int claimed_size = 0;
    VertexSet set;

    int actual_size() const { return set.cardinality(); }
    bool claim_matches() const { return actual_size() == claimed_size; }
};

// delta = 3, n = 8t+4 (t >= 1):
//   {u_{4i-2} : i=1..t} ∪ {v_{4i} : i=1..t} ∪ {v_{4t+2}}, claimed size 2t+1.
ConstructionWitness w3_critical_witness(int t);

// delta = 4, n = 26: {u_2, u_10, v_6, v_7, v_8, v_12}, claimed size 6.
ConstructionWitness w4_order26_witness();

// delta = 4, n = 10t+2 (t >= 2):
//   {u_{5i-1} : i=1..t-1} ∪ {u_{5t}} ∪ {v_{5i-2} : i=1..t} ∪ {v_{5t-1}},
//   claimed size 2t+1.
ConstructionWitness w4_mod2_witness(int t);

// delta = 4, n = 10t+8 (t >= 3):
//   {u_{5i-1} : i=1..t} ∪ {u_{5t}} ∪ {v_{5i-2} : i=1..t+1} ∪ {v_6, v_{5t-1}},
//   claimed size 2t+3. The literal set has 2t+4 members, so the flag trips;
//   the intended bound is established by exact search instead.
ConstructionWitness w4_mod8_witness(int t);

}  // namespace knodel
