#pragma once

#include <vector>

#include "rookham/vertex.hpp"

namespace rookham {

// A Hamiltonian cycle as a cyclic vertex sequence; the closing edge from
// back() to front() is implicit. Rotations and reflections of the same
// cycle compare equal through the canonical form.
struct HamCycle {
    std::vector<Vertex> order;

    // Edges of the cycle, each normalized lesser-first, unsorted.
    std::vector<VertexPair> edge_list() const;

    // Lexicographically least rotation/reflection starting at the least vertex.
    std::vector<Vertex> canonical() const;
};

bool same_cycle(const HamCycle& a, const HamCycle& b);

} // namespace rookham
