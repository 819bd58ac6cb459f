#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "rookham/cycle.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"

namespace rookham {

// Exact decision procedure: does a Hamiltonian cycle of K_host exist that
// contains every forced pair and uses only host edges otherwise? Such a
// cycle necessarily alternates forced pairs with host edges, so the search
// contracts each pair into a node that must be entered at one endpoint and
// left at the other.

struct SearchOptions {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    bool degree_prune = true;       // rule 1: each unvisited pair-node needs a usable
                                    //         host incidence at both endpoints
    bool connectivity_prune = true; // rule 2: usable host edges must connect the
                                    //         unvisited pair-nodes with the path ends
    // rule 3 (no early closure) is structural: the walk only tests the
    // closing edge once every pair-node is on the path
};

struct SearchStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t prunes = 0;
};

enum class SearchOutcome { extendable, nonextendable, inconclusive };

std::string to_string(SearchOutcome o);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::inconclusive;
    std::optional<HamCycle> cycle; // set iff extendable
    SearchStats stats;
    std::uint64_t budget = 0;
};

// Contracted search; deterministic (fail-first branch order with fixed
// tie-breaks). nonextendable is reported only after full exhaustion; a
// blown node budget yields inconclusive instead.
SearchResult extend_by_search(const Graph& host, const Pairing& forced,
                              const SearchOptions& options = {});

// Validation route for the same decision: vertex-level backtracking over
// the original graph, no structural prunes, vertex-order branching. Used by
// the equivalence tests; not the production path.
SearchResult extend_by_search_direct(const Graph& host, const Pairing& forced,
                                     const SearchOptions& options = {});

// A replayable record of one search decision.
struct Certificate {
    std::string graph_desc;
    int order = 0;
    Pairing pairing;
    SearchOutcome outcome = SearchOutcome::inconclusive;
    std::optional<HamCycle> cycle;
    SearchStats stats;
    std::uint64_t budget = 0;
};

Certificate decide_nonextendable(const Graph& host, const Pairing& forced,
                                 const SearchOptions& options = {});

} // namespace rookham
