#include "knodel/vertex.hpp"

namespace knodel {

std::string to_string(VertexId w) {
    return (w.side == Side::U ? "u" : "v") + std::to_string(w.index);
}

std::optional<VertexId> parse_vertex(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    Side side;
    if (text[0] == 'u')
        side = Side::U;
    else if (text[0] == 'v')
        side = Side::V;
    else
        return std::nullopt;
    int index = 0;
    for (char c : text.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        index = index * 10 + (c - '0');
        if (index > 1'000'000'000) return std::nullopt;
    }
    if (index < 1) return std::nullopt;
    return VertexId{side, index};
}

std::vector<VertexId> VertexSet::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(std::size_t(cardinality()));
    u_.for_each([&](int r) { out.push_back(u(r + 1)); });
    v_.for_each([&](int r) { out.push_back(v(r + 1)); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool comma = false;
    for (VertexId w : to_vector()) {
        if (comma) out += ',';
        out += knodel::to_string(w);
        comma = true;
    }
    return out + "}";
}

}  // namespace knodel
