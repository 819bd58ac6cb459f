#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rookham/vertex.hpp"

namespace rookham {

enum class FamilyKind {
    complete,
    path,
    complete_bipartite,
    rook,
    bishop_on_rook,
    hypercube,
    cartesian_product,
    conormal_product,
    line_graph,
    custom,
};

// Family metadata carried by a graph. m1/m2 hold the numeric parameters
// where the kind has them (a single parameter n is stored in m1). Products
// and line graphs keep a free-form detail string describing their factors.
struct Family {
    FamilyKind kind = FamilyKind::custom;
    int m1 = 0;
    int m2 = 0;
    std::string detail;

    std::string token() const;   // serialization name, e.g. "rook"
    std::string to_line() const; // header payload, e.g. "rook 4 3"
};

// Immutable simple undirected graph. Vertices are kept sorted
// lexicographically; adjacency queries are O(1) expected.
class Graph {
public:
    Graph() = default;

    // Builds from explicit data; validates simplicity and that every edge
    // endpoint is a listed vertex.
    static Graph custom(std::vector<Vertex> vertices, std::vector<VertexPair> edges,
                        Family family = {});

    int order() const { return static_cast<int>(vertices_.size()); }
    std::size_t size() const { return edges_.size(); } // edge count

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const Family& family() const { return family_; }

    Vertex vertex(int index) const { return vertices_[static_cast<std::size_t>(index)]; }
    int index_of(Vertex v) const; // -1 if absent
    bool has_vertex(Vertex v) const { return index_of(v) >= 0; }

    bool adjacent(int a, int b) const;
    bool adjacent(Vertex a, Vertex b) const;
    const std::vector<int>& neighbors(int index) const {
        return adj_[static_cast<std::size_t>(index)];
    }
    int degree(int index) const { return static_cast<int>(adj_[static_cast<std::size_t>(index)].size()); }

private:
    std::vector<Vertex> vertices_;
    std::vector<VertexPair> edges_;          // sorted, each pair ordered
    std::vector<std::vector<int>> adj_;      // sorted neighbor lists, by index
    std::unordered_set<std::uint64_t> edge_keys_;
    std::unordered_map<std::uint64_t, int> index_;
    Family family_;
};

// Builders. All label their vertices on the (row, col) grid:
//   complete/path/empty: single row 0, cols 0..n-1
//   complete bipartite:  row 0 = one side, row 1 = the other
//   rook / bishop-on-rook: the m1 x m2 board itself
//   products:            (index in left factor, index in right factor)
//   line graph:          (index of lesser endpoint, index of greater endpoint)
//   hypercube:           col = low floor(n/2) bits, row = remaining high bits,
//                        so every edge of Q4 is a rook(4,4) edge.
Graph build_complete(int n);
Graph build_path(int n);
Graph build_empty(int n);
Graph build_complete_bipartite(int a, int b);
Graph build_rook(int m1, int m2);
Graph build_bishop_on_rook(int m1, int m2);
Graph build_hypercube(int n);

Graph cartesian_product(const Graph& g, const Graph& h);
Graph conormal_product(const Graph& g, const Graph& h);
Graph line_graph(const Graph& g);

} // namespace rookham
