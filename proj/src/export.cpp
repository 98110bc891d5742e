#include "knodel/export.hpp"

#include <ostream>

#include <json.hpp>

namespace knodel {

void write_dimacs(std::ostream& os, const KnodelGraph& g) {
    int half = g.half();
    os << "p edge " << g.order() << ' ' << g.order() * g.delta() / 2 << '\n';
    for (int i = 1; i <= half; ++i)
        g.u_row(i).for_each([&](int s) { os << "e " << i << ' ' << half + s + 1 << '\n'; });
}

void write_json(std::ostream& os, const KnodelGraph& g) {
    nlohmann::ordered_json doc;
    doc["delta"] = g.delta();
    doc["n"] = g.order();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    int half = g.half();
    for (int i = 1; i <= half; ++i)
        g.u_row(i).for_each([&](int s) { edges.push_back({i, half + s + 1}); });
    os << doc.dump() << '\n';
}

}  // namespace knodel
