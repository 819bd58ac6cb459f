#include "rookham/search.hpp"

#include <algorithm>

#include "rookham/checker.hpp"
#include "rookham/errors.hpp"

namespace rookham {

std::string to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::extendable: return "extendable";
        case SearchOutcome::nonextendable: return "nonextendable";
        case SearchOutcome::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

void validate_instance(const Graph& host, const Pairing& forced) {
    if (!forced.covers_exactly(host))
        throw invalid_parameter("forced pairing does not cover the host's vertex set");
}

struct Contracted {
    const Graph& host;
    const SearchOptions& options;
    int n;                      // vertex count
    int k;                      // pair-node count
    std::vector<int> partner;   // by vertex index
    std::vector<int> node_of;   // vertex index -> pair-node id
    std::vector<char> visited;  // by pair-node id
    std::vector<int> walk;      // vertex indices, alternating pair/host steps
    int entry = 0;              // walk start (least vertex of its pair-node)
    SearchStats stats;
    bool out_of_budget = false;
    bool found = false;

    Contracted(const Graph& h, const Pairing& forced, const SearchOptions& opt)
        : host(h), options(opt), n(h.order()), k(h.order() / 2) {
        partner.assign(static_cast<std::size_t>(n), -1);
        node_of.assign(static_cast<std::size_t>(n), -1);
        visited.assign(static_cast<std::size_t>(k), 0);
        int id = 0;
        for (const auto& pr : forced.pairs()) {
            int a = host.index_of(pr.first);
            int b = host.index_of(pr.second);
            partner[static_cast<std::size_t>(a)] = b;
            partner[static_cast<std::size_t>(b)] = a;
            node_of[static_cast<std::size_t>(a)] = id;
            node_of[static_cast<std::size_t>(b)] = id;
            ++id;
        }
        walk.reserve(static_cast<std::size_t>(n));
    }

    // host incidences of vertex v usable right now: endpoints of unvisited
    // pair-nodes, the current walk end, and the closure target. A host edge
    // parallel to v's own forced pair can never be a cycle edge.
    int usable_count(int v, int walk_end) const {
        int count = 0;
        int own = partner[static_cast<std::size_t>(v)];
        for (int w : host.neighbors(v)) {
            if (w == own) continue;
            if (!visited[static_cast<std::size_t>(node_of[static_cast<std::size_t>(w)])] ||
                w == walk_end || w == entry)
                ++count;
        }
        return count;
    }

    bool degree_ok(int walk_end) const {
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(node_of[static_cast<std::size_t>(v)])]) continue;
            if (usable_count(v, walk_end) == 0) return false;
        }
        return true;
    }

    // BFS over {unvisited pair-nodes} + the two path terminals
    bool connected_ok(int walk_end) const {
        int unvisited = 0;
        for (int id = 0; id < k; ++id)
            if (!visited[static_cast<std::size_t>(id)]) ++unvisited;
        if (unvisited == 0) return true;

        std::vector<char> seen_node(static_cast<std::size_t>(k), 0);
        std::vector<int> queue;
        bool entry_reached = false;
        queue.push_back(walk_end);
        // walk_end and entry belong to visited nodes; track them separately
        std::size_t head = 0;
        auto push_vertex = [&](int v) {
            if (v == entry) entry_reached = true;
            int id = node_of[static_cast<std::size_t>(v)];
            if (visited[static_cast<std::size_t>(id)]) return;
            if (seen_node[static_cast<std::size_t>(id)]) return;
            seen_node[static_cast<std::size_t>(id)] = 1;
            queue.push_back(v);
            queue.push_back(partner[static_cast<std::size_t>(v)]);
        };
        while (head < queue.size()) {
            int v = queue[head++];
            for (int w : host.neighbors(v)) push_vertex(w);
        }
        if (!entry_reached) return false;
        for (int id = 0; id < k; ++id)
            if (!visited[static_cast<std::size_t>(id)] && !seen_node[static_cast<std::size_t>(id)])
                return false;
        return true;
    }

    bool dfs(int walk_end, int visited_count) {
        if (found || out_of_budget) return found;
        if (++stats.nodes_visited > options.node_budget) {
            out_of_budget = true;
            return false;
        }
        if (visited_count == k)
            return found = host.adjacent(walk_end, entry);

        if (options.degree_prune && !degree_ok(walk_end)) {
            ++stats.prunes;
            return false;
        }
        if (options.connectivity_prune && !connected_ok(walk_end)) {
            ++stats.prunes;
            return false;
        }

        // fail-first: most-constrained target pair-node first, then vertex order
        std::vector<std::pair<int, int>> candidates; // (usable count of target node, vertex)
        for (int w : host.neighbors(walk_end)) {
            int id = node_of[static_cast<std::size_t>(w)];
            if (visited[static_cast<std::size_t>(id)]) continue;
            int p = partner[static_cast<std::size_t>(w)];
            candidates.push_back({usable_count(w, walk_end) + usable_count(p, walk_end), w});
        }
        std::sort(candidates.begin(), candidates.end());

        for (auto [score, w] : candidates) {
            (void)score;
            int id = node_of[static_cast<std::size_t>(w)];
            int p = partner[static_cast<std::size_t>(w)];
            visited[static_cast<std::size_t>(id)] = 1;
            walk.push_back(w);
            walk.push_back(p);
            if (dfs(p, visited_count + 1)) return true;
            if (out_of_budget) return false;
            walk.pop_back();
            walk.pop_back();
            visited[static_cast<std::size_t>(id)] = 0;
        }
        return false;
    }
};

SearchResult finish(const Graph& host, const Pairing& forced, const SearchOptions& options,
                    bool found, bool out_of_budget, const std::vector<int>& walk,
                    SearchStats stats) {
    SearchResult result;
    result.budget = options.node_budget;
    result.stats = stats;
    if (found) {
        HamCycle cycle;
        cycle.order.reserve(walk.size());
        for (int idx : walk) cycle.order.push_back(host.vertex(idx));
        if (!verify_extension(host, forced, cycle))
            throw internal_error("search produced a cycle that fails verification");
        result.outcome = SearchOutcome::extendable;
        result.cycle = std::move(cycle);
    } else if (out_of_budget) {
        result.outcome = SearchOutcome::inconclusive;
    } else {
        result.outcome = SearchOutcome::nonextendable;
    }
    return result;
}

} // namespace

SearchResult extend_by_search(const Graph& host, const Pairing& forced,
                              const SearchOptions& options) {
    validate_instance(host, forced);
    if (host.order() == 2) {
        // a cycle needs at least three vertices
        SearchResult result;
        result.outcome = SearchOutcome::nonextendable;
        result.budget = options.node_budget;
        return result;
    }
    Contracted search(host, forced, options);
    search.entry = 0; // vertex 0 is the least vertex; fixing it and the
                      // traversal direction visits each cycle once
    int q0 = search.partner[0];
    search.visited[static_cast<std::size_t>(search.node_of[0])] = 1;
    search.walk.push_back(0);
    search.walk.push_back(q0);
    bool found = search.dfs(q0, 1);
    return finish(host, forced, options, found, search.out_of_budget, search.walk, search.stats);
}

SearchResult extend_by_search_direct(const Graph& host, const Pairing& forced,
                                     const SearchOptions& options) {
    validate_instance(host, forced);
    if (host.order() == 2) {
        SearchResult result;
        result.outcome = SearchOutcome::nonextendable;
        result.budget = options.node_budget;
        return result;
    }
    const int n = host.order();
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    for (const auto& pr : forced.pairs()) {
        int a = host.index_of(pr.first);
        int b = host.index_of(pr.second);
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n));
    SearchStats stats;
    bool out_of_budget = false;
    bool found = false;

    // each vertex's forced pair must appear as consecutive cycle vertices,
    // so after every host-edge step the walk must take the partner edge
    auto dfs = [&](auto&& self, int u) -> bool {
        if (++stats.nodes_visited > options.node_budget) {
            out_of_budget = true;
            return false;
        }
        if (path.size() == static_cast<std::size_t>(n))
            return found = host.adjacent(u, 0);
        for (int w : host.neighbors(u)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            int p = partner[static_cast<std::size_t>(w)];
            if (used[static_cast<std::size_t>(p)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            used[static_cast<std::size_t>(p)] = 1;
            path.push_back(w);
            path.push_back(p);
            if (self(self, p)) return true;
            if (out_of_budget) return false;
            path.pop_back();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
            used[static_cast<std::size_t>(p)] = 0;
        }
        return false;
    };

    int q0 = partner[0];
    used[0] = 1;
    used[static_cast<std::size_t>(q0)] = 1;
    path.push_back(0);
    path.push_back(q0);
    found = dfs(dfs, q0);
    return finish(host, forced, options, found, out_of_budget, path, stats);
}

Certificate decide_nonextendable(const Graph& host, const Pairing& forced,
                                 const SearchOptions& options) {
    Certificate cert;
    cert.graph_desc = host.family().to_line();
    cert.order = host.order();
    cert.pairing = forced;
    SearchResult result = extend_by_search(host, forced, options);
    cert.outcome = result.outcome;
    cert.cycle = std::move(result.cycle);
    cert.stats = result.stats;
    cert.budget = result.budget;
    return cert;
}

} // namespace rookham
