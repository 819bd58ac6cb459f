#pragma once

// Test-only brute-force oracle: enumerate every cyclic vertex order of the
// host (first vertex pinned, direction fixed) and accept the first one whose
// consecutive pairs are all host edges or forced pairs and that carries
// every forced pair. Independent of the search module by construction; only
// usable on small graphs.

#include <algorithm>
#include <optional>
#include <vector>

#include "rookham/checker.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"

namespace rookham::testing {

inline std::optional<HamCycle> brute_force_extension(const Graph& host, const Pairing& forced) {
    const int n = host.order();
    if (n < 3 || n % 2 != 0) return std::nullopt;
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);

    auto pair_or_edge = [&](Vertex a, Vertex b) {
        return host.adjacent(a, b) || forced.contains({a, b});
    };

    do {
        if (rest.front() > rest.back()) continue; // each cycle once, one direction
        HamCycle h;
        h.order.push_back(host.vertex(0));
        for (int idx : rest) h.order.push_back(host.vertex(idx));

        bool ok = true;
        for (std::size_t i = 0; i < h.order.size() && ok; ++i)
            ok = pair_or_edge(h.order[i], h.order[(i + 1) % h.order.size()]);
        if (ok && verify_extension(host, forced, h)) return h;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

} // namespace rookham::testing
