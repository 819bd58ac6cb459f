#include "rookham/graph.hpp"

#include <algorithm>
#include <charconv>

#include "rookham/errors.hpp"

namespace rookham {

std::string to_label(Vertex v) {
    return std::to_string(v.row) + "." + std::to_string(v.col);
}

Vertex vertex_from_label(const std::string& label) {
    auto dot = label.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= label.size())
        throw parse_error("bad vertex label: '" + label + "'");
    Vertex v;
    auto parse_int = [&](const char* first, const char* last, int& out) {
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{} || ptr != last || out < 0)
            throw parse_error("bad vertex label: '" + label + "'");
    };
    parse_int(label.data(), label.data() + dot, v.row);
    parse_int(label.data() + dot + 1, label.data() + label.size(), v.col);
    return v;
}

std::string Family::token() const {
    switch (kind) {
        case FamilyKind::complete: return "complete";
        case FamilyKind::path: return "path";
        case FamilyKind::complete_bipartite: return "knn";
        case FamilyKind::rook: return "rook";
        case FamilyKind::bishop_on_rook: return "bor";
        case FamilyKind::hypercube: return "hypercube";
        case FamilyKind::cartesian_product: return "cartesian";
        case FamilyKind::conormal_product: return "conormal";
        case FamilyKind::line_graph: return "linegraph";
        case FamilyKind::custom: return "custom";
    }
    return "custom";
}

std::string Family::to_line() const {
    switch (kind) {
        case FamilyKind::complete:
        case FamilyKind::path:
        case FamilyKind::hypercube:
            return token() + " " + std::to_string(m1);
        case FamilyKind::complete_bipartite:
        case FamilyKind::rook:
        case FamilyKind::bishop_on_rook:
            return token() + " " + std::to_string(m1) + " " + std::to_string(m2);
        default:
            return token();
    }
}

Graph Graph::custom(std::vector<Vertex> vertices, std::vector<VertexPair> edges, Family family) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw invalid_parameter("duplicate vertex");
    g.vertices_ = std::move(vertices);
    g.index_.reserve(g.vertices_.size() * 2);
    for (int i = 0; i < g.order(); ++i)
        g.index_.emplace(vertex_key(g.vertices_[static_cast<std::size_t>(i)]), i);

    for (auto& e : edges) e = ordered_pair(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    g.adj_.assign(g.vertices_.size(), {});
    g.edge_keys_.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        int a = g.index_of(e.first);
        int b = g.index_of(e.second);
        if (a < 0 || b < 0)
            throw invalid_parameter("edge endpoint is not a listed vertex");
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        g.edge_keys_.insert(key);
        g.adj_[static_cast<std::size_t>(a)].push_back(b);
        g.adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edges_ = std::move(edges);
    g.family_ = std::move(family);
    return g;
}

int Graph::index_of(Vertex v) const {
    auto it = index_.find(vertex_key(v));
    return it == index_.end() ? -1 : it->second;
}

bool Graph::adjacent(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    return edge_keys_.contains(key);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    int ia = index_of(a);
    int ib = index_of(b);
    if (ia < 0 || ib < 0) return false;
    return adjacent(ia, ib);
}

namespace {

std::vector<Vertex> row_of_cells(int row, int n) {
    std::vector<Vertex> vs;
    vs.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) vs.push_back({row, c});
    return vs;
}

} // namespace

Graph build_complete(int n) {
    if (n < 1) throw invalid_parameter("complete graph needs n >= 1");
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({{0, i}, {0, j}});
    return Graph::custom(row_of_cells(0, n), std::move(edges),
                         {FamilyKind::complete, n, 0, {}});
}

Graph build_path(int n) {
    if (n < 1) throw invalid_parameter("path needs n >= 1");
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({{0, i}, {0, i + 1}});
    return Graph::custom(row_of_cells(0, n), std::move(edges), {FamilyKind::path, n, 0, {}});
}

Graph build_empty(int n) {
    if (n < 1) throw invalid_parameter("empty graph needs n >= 1");
    return Graph::custom(row_of_cells(0, n), {}, {FamilyKind::custom, n, 0, "empty"});
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw invalid_parameter("complete bipartite graph needs both parts nonempty");
    std::vector<Vertex> vs = row_of_cells(0, a);
    auto ws = row_of_cells(1, b);
    vs.insert(vs.end(), ws.begin(), ws.end());
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({{0, i}, {1, j}});
    return Graph::custom(std::move(vs), std::move(edges),
                         {FamilyKind::complete_bipartite, a, b, {}});
}

Graph build_rook(int m1, int m2) {
    if (m1 < 1 || m2 < 1) throw invalid_parameter("rook graph needs m1, m2 >= 1");
    std::vector<Vertex> vs;
    vs.reserve(static_cast<std::size_t>(m1) * static_cast<std::size_t>(m2));
    for (int r = 0; r < m1; ++r)
        for (int c = 0; c < m2; ++c) vs.push_back({r, c});
    std::vector<VertexPair> edges;
    for (int r = 0; r < m1; ++r)
        for (int c = 0; c < m2; ++c) {
            for (int c2 = c + 1; c2 < m2; ++c2) edges.push_back({{r, c}, {r, c2}});
            for (int r2 = r + 1; r2 < m1; ++r2) edges.push_back({{r, c}, {r2, c}});
        }
    return Graph::custom(std::move(vs), std::move(edges), {FamilyKind::rook, m1, m2, {}});
}

Graph build_bishop_on_rook(int m1, int m2) {
    if (m1 < 1 || m2 < 1) throw invalid_parameter("bishop-on-rook graph needs m1, m2 >= 1");
    std::vector<Vertex> vs;
    std::vector<VertexPair> edges;
    for (int r = 0; r < m1; ++r)
        for (int c = 0; c < m2; ++c) vs.push_back({r, c});
    // adjacent iff the rows differ (co-normal product of K_{m1} with the
    // empty graph on m2 vertices)
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i].row != vs[j].row) edges.push_back({vs[i], vs[j]});
    return Graph::custom(std::move(vs), std::move(edges),
                         {FamilyKind::bishop_on_rook, m1, m2, {}});
}

Graph build_hypercube(int n) {
    if (n < 1 || n > 20) throw invalid_parameter("hypercube dimension must be in [1, 20]");
    int col_bits = n / 2;
    int col_mask = (1 << col_bits) - 1;
    auto cell = [&](std::uint32_t x) { return Vertex{static_cast<int>(x >> col_bits),
                                                     static_cast<int>(x & static_cast<std::uint32_t>(col_mask))}; };
    std::uint32_t count = 1u << n;
    std::vector<Vertex> vs;
    vs.reserve(count);
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(count / 2) * static_cast<std::size_t>(n));
    for (std::uint32_t x = 0; x < count; ++x) {
        vs.push_back(cell(x));
        for (int b = 0; b < n; ++b) {
            std::uint32_t y = x ^ (1u << b);
            if (y > x) edges.push_back({cell(x), cell(y)});
        }
    }
    return Graph::custom(std::move(vs), std::move(edges), {FamilyKind::hypercube, n, 0, {}});
}

namespace {

Graph product(const Graph& g, const Graph& h, bool cartesian) {
    if (g.order() == 0 || h.order() == 0) throw invalid_parameter("product of an empty graph");
    std::vector<Vertex> vs;
    vs.reserve(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < h.order(); ++j) vs.push_back({i, j});
    std::vector<VertexPair> edges;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < h.order(); ++j)
            for (int k = i; k < g.order(); ++k) {
                int l0 = (k == i) ? j + 1 : 0;
                for (int l = l0; l < h.order(); ++l) {
                    bool left = g.adjacent(i, k);
                    bool right = h.adjacent(j, l);
                    bool adj = cartesian ? ((i == k && right) || (left && j == l))
                                         : (left || right);
                    if (adj) edges.push_back({{i, j}, {k, l}});
                }
            }
    Family fam;
    fam.kind = cartesian ? FamilyKind::cartesian_product : FamilyKind::conormal_product;
    fam.detail = g.family().to_line() + " x " + h.family().to_line();
    return Graph::custom(std::move(vs), std::move(edges), std::move(fam));
}

} // namespace

Graph cartesian_product(const Graph& g, const Graph& h) { return product(g, h, true); }

Graph conormal_product(const Graph& g, const Graph& h) { return product(g, h, false); }

Graph line_graph(const Graph& g) {
    if (g.size() == 0) throw invalid_parameter("line graph of an edgeless graph");
    // one vertex per edge of g, labeled by the endpoint indices in g's
    // vertex order (lesser, greater)
    std::vector<Vertex> vs;
    vs.reserve(g.size());
    for (const auto& e : g.edges())
        vs.push_back({g.index_of(e.first), g.index_of(e.second)});
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Vertex& a = vs[i];
            const Vertex& b = vs[j];
            bool share = a.row == b.row || a.row == b.col || a.col == b.row || a.col == b.col;
            if (share) edges.push_back({a, b});
        }
    Family fam;
    fam.kind = FamilyKind::line_graph;
    fam.detail = "line graph of " + g.family().to_line();
    return Graph::custom(std::move(vs), std::move(edges), std::move(fam));
}

} // namespace rookham
