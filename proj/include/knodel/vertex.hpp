#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knodel/bitset.hpp"

namespace knodel {

enum class Side : std::uint8_t { U, V };

// A vertex label u_i or v_j with 1-based index in 1..n/2.
struct VertexId {
    Side side;
    int index;

    friend bool operator==(VertexId, VertexId) = default;
    friend auto operator<=>(VertexId, VertexId) = default;  // U block before V, then by index
};

inline VertexId u(int index) { return {Side::U, index}; }
inline VertexId v(int index) { return {Side::V, index}; }

std::string to_string(VertexId w);

// Parses "u12" / "v3"; rejects anything else.
std::optional<VertexId> parse_vertex(std::string_view text);

// A set of vertices stored as one bitmask per side, indices 1..half.
// The two masks structurally partition the set into its U and V parts.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int half) : u_(half), v_(half) {}

    int half() const { return u_.size(); }

    bool contains(VertexId w) const { return bits(w.side).test(check(w)); }
    void insert(VertexId w) { bits(w.side).set(check(w)); }
    void erase(VertexId w) { bits(w.side).reset(check(w)); }

    int cardinality() const { return u_.count() + v_.count(); }
    bool empty() const { return u_.none() && v_.none(); }

    const Bitset& u_bits() const { return u_; }
    const Bitset& v_bits() const { return v_; }
    Bitset& u_bits() { return u_; }
    Bitset& v_bits() { return v_; }
    const Bitset& bits(Side s) const { return s == Side::U ? u_ : v_; }
    Bitset& bits(Side s) { return s == Side::U ? u_ : v_; }

    // Ascending (side, index) order: the whole U part, then the V part.
    std::vector<VertexId> to_vector() const;

    // "{u2,u6,v4}"
    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int check(VertexId w) const {
        if (w.index < 1 || w.index > half())
            throw std::out_of_range("vertex index " + std::to_string(w.index) +
                                    " outside 1.." + std::to_string(half()));
        return w.index - 1;
    }

    Bitset u_, v_;
};

}  // namespace knodel
