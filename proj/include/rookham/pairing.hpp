#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rookham/graph.hpp"
#include "rookham/vertex.hpp"

namespace rookham {

// A pairing: a perfect matching of the complete graph on some vertex set.
// Pairs need not be edges of the ground graph. Canonical form: each pair
// stored (lesser, greater), pairs sorted lexicographically.
class Pairing {
public:
    Pairing() = default;

    // Canonicalizes; rejects pairs sharing a vertex.
    static Pairing of_pairs(std::vector<VertexPair> pairs);

    const std::vector<VertexPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool contains(VertexPair p) const;
    // Vertex the pairing matches v with; nullopt if v is uncovered.
    std::optional<Vertex> partner(Vertex v) const;
    // True iff the pairs cover exactly the graph's vertex set.
    bool covers_exactly(const Graph& ground) const;

    auto operator<=>(const Pairing&) const = default;

private:
    std::vector<VertexPair> pairs_;
};

// (n-1)!! — the number of pairings of n vertices (n even).
std::uint64_t pairing_count(int n_vertices);

// Yields every perfect matching of the complete graph on the ground's
// vertex set exactly once, pairing the least unmatched vertex with each
// greater vertex in turn. Return false from the callback to stop early.
void enumerate_pairings(const Graph& ground, const std::function<bool(const Pairing&)>& fn);
std::vector<Pairing> all_pairings(const Graph& ground);

// Uniformly random pairing: repeatedly pair the least unmatched vertex with
// a uniformly chosen unmatched partner. mt19937_64 keyed by the seed.
Pairing random_pairing(const Graph& ground, std::uint64_t seed);
Pairing random_pairing(const Graph& ground, std::mt19937_64& rng);

// True iff every pair of m is an edge of ground (m is then a perfect
// matching of ground itself, not just of K_ground).
bool is_perfect_matching_of(const Graph& ground, const Pairing& m);

// The m2 vertical pairs joining the two row-copies of rook(2, m2). Only
// defined for odd m2 >= 3, where it witnesses nonextendability.
Pairing cut_pairing(int m2);

// How a pairing can match the four cells of one column of rook(4, m)
// among themselves: rows {0,1}+{2,3}, {0,2}+{1,3}, or {0,3}+{1,2}.
enum class ColumnClass { rows01_23 = 0, rows02_13 = 1, rows03_12 = 2 };

struct ColumnClassProfile {
    std::array<std::uint32_t, 3> counts{}; // indexed by ColumnClass
    std::vector<ColumnClass> column_class; // one entry per column

    std::uint32_t count(ColumnClass c) const { return counts[static_cast<std::size_t>(c)]; }
};

// Classifies the columns of rook(4, m) under m. Returns nullopt when some
// pair of the pairing leaves its column (equivalently, some column is not
// internally matched). Throws invalid_parameter unless the graph is a
// 4-row rook graph and m covers it.
std::optional<ColumnClassProfile> classify_columns(const Graph& rook4, const Pairing& m);

} // namespace rookham
