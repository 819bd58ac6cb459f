#include "rookham/cycle.hpp"

#include <algorithm>

namespace rookham {

std::vector<VertexPair> HamCycle::edge_list() const {
    std::vector<VertexPair> edges;
    const std::size_t n = order.size();
    if (n < 2) return edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back(ordered_pair(order[i], order[(i + 1) % n]));
    return edges;
}

std::vector<Vertex> HamCycle::canonical() const {
    const std::size_t n = order.size();
    if (n == 0) return {};
    std::size_t start = static_cast<std::size_t>(
        std::min_element(order.begin(), order.end()) - order.begin());
    std::vector<Vertex> fwd(n), bwd(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = order[(start + i) % n];
        bwd[i] = order[(start + n - i) % n];
    }
    return std::min(fwd, bwd);
}

bool same_cycle(const HamCycle& a, const HamCycle& b) {
    return a.canonical() == b.canonical();
}

} // namespace rookham
