#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "rookham/checker.hpp"
#include "rookham/errors.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"
#include "rookham/search.hpp"

using namespace rookham;

namespace {

Graph petersen() {
    std::vector<Vertex> vs;
    std::vector<VertexPair> es;
    for (int i = 0; i < 5; ++i) {
        vs.push_back({0, i}); // outer 5-cycle
        vs.push_back({1, i}); // inner 5-cycle, step 2
    }
    for (int i = 0; i < 5; ++i) {
        es.push_back({{0, i}, {0, (i + 1) % 5}});
        es.push_back({{1, i}, {1, (i + 2) % 5}});
        es.push_back({{0, i}, {1, i}});
    }
    return Graph::custom(vs, es);
}

} // namespace

TEST_CASE("the vertical cut of rook(2,3) does not extend") {
    Graph g = build_rook(2, 3);
    SearchResult r = extend_by_search(g, cut_pairing(3));
    CHECK(r.outcome == SearchOutcome::nonextendable);
    CHECK_FALSE(r.cycle.has_value());
}

TEST_CASE("alternate edges of a Hamiltonian cycle always extend") {
    Graph g = build_rook(2, 3);
    // (0,0),(0,1),(0,2),(1,2),(1,1),(1,0) is a Hamiltonian cycle; force its
    // alternate edges
    Pairing forced = Pairing::of_pairs({{{0, 0}, {0, 1}}, {{0, 2}, {1, 2}}, {{1, 1}, {1, 0}}});
    SearchResult r = extend_by_search(g, forced);
    REQUIRE(r.outcome == SearchOutcome::extendable);
    CHECK(verify_extension(g, forced, *r.cycle));
}

TEST_CASE("the Petersen graph has a nonextendable pairing") {
    Graph g = petersen();
    bool found = false;
    std::size_t count = 0;
    enumerate_pairings(g, [&](const Pairing& m) {
        ++count;
        if (extend_by_search(g, m).outcome == SearchOutcome::nonextendable) found = true;
        return !found;
    });
    CHECK(found);
    CHECK(count <= 945);
}

TEST_CASE("nonextendability certificates") {
    Certificate c3 = decide_nonextendable(build_rook(2, 3), cut_pairing(3));
    CHECK(c3.outcome == SearchOutcome::nonextendable);
    CHECK(c3.stats.nodes_visited > 0);

    Certificate c5 = decide_nonextendable(build_rook(2, 5), cut_pairing(5));
    CHECK(c5.outcome == SearchOutcome::nonextendable);

    Graph r24 = build_rook(2, 4);
    Pairing verticals = Pairing::of_pairs(
        {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{0, 3}, {1, 3}}});
    Certificate ext = decide_nonextendable(r24, verticals);
    CHECK(ext.outcome == SearchOutcome::extendable);
    REQUIRE(ext.cycle.has_value());
    CHECK(verify_extension(r24, verticals, *ext.cycle));
}

TEST_CASE("order-2 instances never extend") {
    Graph k2 = build_complete(2);
    Pairing only = all_pairings(k2).front();
    CHECK(extend_by_search(k2, only).outcome == SearchOutcome::nonextendable);
    CHECK(extend_by_search_direct(k2, only).outcome == SearchOutcome::nonextendable);
}

TEST_CASE("budget exhaustion reports inconclusive, never nonextendable") {
    Graph g = build_rook(4, 3);
    Pairing m = random_pairing(g, 99);
    SearchOptions tight;
    tight.node_budget = 1;
    SearchResult r = extend_by_search(g, m, tight);
    CHECK(r.outcome == SearchOutcome::inconclusive);
    CHECK(r.stats.nodes_visited >= 1);
}

TEST_CASE("contracted, direct, and brute-force routes agree on small boards") {
    for (const Graph& g : {build_rook(2, 2), build_rook(2, 3)}) {
        enumerate_pairings(g, [&](const Pairing& m) {
            SearchResult contracted = extend_by_search(g, m);
            SearchResult direct = extend_by_search_direct(g, m);
            auto brute = testing::brute_force_extension(g, m);
            CHECK(contracted.outcome == direct.outcome);
            CHECK((contracted.outcome == SearchOutcome::extendable) == brute.has_value());
            if (contracted.cycle) CHECK(verify_extension(g, m, *contracted.cycle));
            if (direct.cycle) CHECK(verify_extension(g, m, *direct.cycle));
            return true;
        });
    }
}

TEST_CASE("random graphs: all three decision routes agree") {
    std::mt19937_64 rng(424242);
    for (int round = 0; round < 40; ++round) {
        int n = 4 + 2 * static_cast<int>(rng() % 3); // 4, 6 or 8 vertices
        std::vector<Vertex> vs;
        for (int i = 0; i < n; ++i) vs.push_back({0, i});
        std::vector<VertexPair> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) es.push_back({{0, i}, {0, j}});
        Graph g = Graph::custom(vs, es);
        for (int draw = 0; draw < 8; ++draw) {
            Pairing m = random_pairing(g, rng);
            SearchResult contracted = extend_by_search(g, m);
            SearchResult direct = extend_by_search_direct(g, m);
            auto brute = testing::brute_force_extension(g, m);
            CHECK(contracted.outcome == direct.outcome);
            CHECK((contracted.outcome == SearchOutcome::extendable) == brute.has_value());
            if (contracted.cycle) CHECK(verify_extension(g, m, *contracted.cycle));
        }
    }
}

TEST_CASE("search is deterministic") {
    Graph g = build_rook(4, 3);
    Pairing m = random_pairing(g, 7);
    SearchResult a = extend_by_search(g, m);
    SearchResult b = extend_by_search(g, m);
    REQUIRE(a.cycle.has_value());
    REQUIRE(b.cycle.has_value());
    CHECK(a.cycle->order == b.cycle->order);
    CHECK(a.stats.nodes_visited == b.stats.nodes_visited);
}

TEST_CASE("disabling the prunes never changes a decision") {
    std::vector<Graph> corpus;
    corpus.push_back(build_complete(2));
    corpus.push_back(build_complete(4));
    corpus.push_back(build_complete(6));
    corpus.push_back(build_complete(8));
    corpus.push_back(build_rook(2, 2));
    corpus.push_back(build_rook(2, 3));
    corpus.push_back(build_rook(2, 4));
    corpus.push_back(build_complete_bipartite(2, 2));
    corpus.push_back(build_complete_bipartite(3, 3));
    corpus.push_back(build_complete_bipartite(4, 4));
    corpus.push_back(build_hypercube(3));
    corpus.push_back(build_bishop_on_rook(3, 2));
    corpus.push_back(build_path(4));
    corpus.push_back(build_path(6));
    corpus.push_back(build_empty(4));

    SearchOptions bare;
    bare.degree_prune = false;
    bare.connectivity_prune = false;
    SearchOptions degree_only;
    degree_only.connectivity_prune = false;
    SearchOptions connectivity_only;
    connectivity_only.degree_prune = false;

    for (const Graph& g : corpus) {
        REQUIRE(g.order() <= 8);
        enumerate_pairings(g, [&](const Pairing& m) {
            SearchOutcome full = extend_by_search(g, m).outcome;
            CHECK(full == extend_by_search(g, m, bare).outcome);
            CHECK(full == extend_by_search(g, m, degree_only).outcome);
            CHECK(full == extend_by_search(g, m, connectivity_only).outcome);
            return true;
        });
    }
}
