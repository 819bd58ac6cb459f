#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "rookham/errors.hpp"

namespace rookham {

// A board cell. Every graph in this library, including products and line
// graphs, is re-encoded onto (row, col) grid labels so pairings and cycles
// serialize uniformly. The total order is lexicographic (row, col).
struct Vertex {
    int row = 0;
    int col = 0;

    auto operator<=>(const Vertex&) const = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair ordered_pair(Vertex a, Vertex b) {
    if (a == b) throw invalid_parameter("pair endpoints must differ");
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

inline std::uint64_t vertex_key(Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.row)) << 32) |
           static_cast<std::uint32_t>(v.col);
}

// Text label grammar used by every file format: "<row>.<col>", zero-based.
std::string to_label(Vertex v);
Vertex vertex_from_label(const std::string& label);

} // namespace rookham
