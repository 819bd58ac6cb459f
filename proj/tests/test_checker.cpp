#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rookham/checker.hpp"
#include "rookham/construct.hpp"
#include "rookham/errors.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"
#include "rookham/search.hpp"

using namespace rookham;

TEST_CASE("verifier accepts a genuine extension and rejects tampering") {
    Graph cube = build_hypercube(3);
    // pairing with the long diagonal (0,0)-(3,1); not a matching of the cube
    Pairing m = Pairing::of_pairs({{{0, 0}, {3, 1}},
                                   {{0, 1}, {1, 1}},
                                   {{1, 0}, {2, 0}},
                                   {{2, 1}, {3, 0}}});
    SearchResult r = extend_by_search(cube, m);
    REQUIRE(r.outcome == SearchOutcome::extendable);
    CHECK(verify_extension(cube, m, *r.cycle));

    // swapping two vertices breaks it
    HamCycle tampered = *r.cycle;
    std::swap(tampered.order[1], tampered.order[4]);
    CHECK_FALSE(verify_extension(cube, m, tampered));
}

TEST_CASE("verifier demands every pair on the cycle") {
    Graph g = build_rook(2, 2);
    Pairing m = Pairing::of_pairs({{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
    // this cycle uses only graph edges and skips both diagonal pairs
    HamCycle skip{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    CHECK_FALSE(verify_extension(g, m, skip));
}

TEST_CASE("verifier rejects edges outside graph and pairing") {
    Graph g = build_rook(2, 3);
    Pairing m = Pairing::of_pairs({{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
    // (1,0)-(0,1) is neither a pair nor a rook move... it is a rook move? no:
    // different row and different column
    HamCycle bad{{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}};
    CHECK_FALSE(verify_extension(g, m, bad));
}

TEST_CASE("check_ph finds the cut witness on rook(2,3)") {
    CheckOptions opts;
    opts.extender = ExtenderChoice::search;
    PhReport report = check_ph(build_rook(2, 3), opts);
    CHECK(report.pairings_tested == 15);
    CHECK(report.verdict == PhVerdict::not_ph);
    REQUIRE(report.witness.has_value());
    CHECK(report.failures.size() >= 1);
    bool cut_among_failures = false;
    for (const auto& f : report.failures) cut_among_failures |= (f == cut_pairing(3));
    CHECK(cut_among_failures);
    CHECK(report.extended + report.failures.size() + report.inconclusive ==
          report.pairings_tested);
}

TEST_CASE("check_ph confirms the cube exhaustively") {
    CheckOptions opts;
    opts.extender = ExtenderChoice::search;
    PhReport report = check_ph(build_hypercube(3), opts);
    CHECK(report.pairings_tested == 105);
    CHECK(report.extended == 105);
    CHECK(report.verdict == PhVerdict::ph_confirmed_at_scope);
}

TEST_CASE("constructive and search extenders agree everywhere they run") {
    CheckOptions opts;
    opts.extender = ExtenderChoice::both;
    opts.workers = 2;

    PhReport rook43 = check_ph(build_rook(4, 3), opts);
    CHECK(rook43.pairings_tested == 10395);
    CHECK(rook43.extended == 10395);
    CHECK(rook43.disagreements.empty());
    CHECK(rook43.verdict == PhVerdict::ph_confirmed_at_scope);

    for (int n = 2; n <= 4; ++n) {
        PhReport knn = check_ph(build_complete_bipartite(n, n), opts);
        CHECK(knn.extended == knn.pairings_tested);
        CHECK(knn.disagreements.empty());
        CHECK(knn.verdict == PhVerdict::ph_confirmed_at_scope);
    }
}

TEST_CASE("sampled mode is deterministic and bounded") {
    CheckOptions opts;
    opts.mode = CheckMode::sampled;
    opts.sample_count = 64;
    opts.seed = 99;
    opts.extender = ExtenderChoice::constructive;
    Graph g = build_rook(4, 5);
    PhReport a = check_ph(g, opts);
    PhReport b = check_ph(g, opts);
    CHECK(a.pairings_tested == 64);
    CHECK(a.extended == 64);
    CHECK(a.verdict == PhVerdict::sampled_no_counterexample);
    CHECK(a.escalations == 0);
    CHECK(b.extended == a.extended);
}

TEST_CASE("exhaustive mode refuses oversized graphs") {
    CheckOptions opts;
    CHECK_THROWS_AS(check_ph(build_rook(4, 4), opts), invalid_parameter);
    CHECK_THROWS_AS(check_ph(build_complete(5), opts), no_pairing_exists);
}

TEST_CASE("budget exhaustion flags the report inconclusive") {
    CheckOptions opts;
    opts.extender = ExtenderChoice::search;
    opts.search.node_budget = 1;
    PhReport report = check_ph(build_rook(2, 4), opts);
    CHECK(report.inconclusive > 0);
    CHECK(report.verdict == PhVerdict::inconclusive);
}

TEST_CASE("theorem-2 shape on the small boards") {
    CheckOptions opts;
    opts.extender = ExtenderChoice::search;
    opts.workers = 2;
    struct Expect {
        int m1, m2;
        bool ph;
    };
    for (const Expect& e : {Expect{2, 2, true}, Expect{2, 3, false}, Expect{2, 4, true},
                            Expect{3, 2, false}, Expect{4, 2, true}, Expect{2, 5, false}}) {
        PhReport report = check_ph(build_rook(e.m1, e.m2), opts);
        CHECK((report.verdict == PhVerdict::ph_confirmed_at_scope) == e.ph);
        CHECK((report.verdict == PhVerdict::not_ph) == !e.ph);
    }
}

TEST_CASE("worker count does not change the report") {
    CheckOptions seq;
    seq.extender = ExtenderChoice::search;
    seq.workers = 1;
    CheckOptions par = seq;
    par.workers = 4;
    Graph g = build_rook(2, 5);
    PhReport a = check_ph(g, seq);
    PhReport b = check_ph(g, par);
    CHECK(a.extended == b.extended);
    CHECK(a.failures == b.failures);
    CHECK(a.verdict == b.verdict);
}

TEST_CASE("bishop-on-rook exploration covers the small boards") {
    CheckOptions base;
    base.workers = 2;
    auto reports = explore_bishop_on_rook(6, base);
    // boards with 2, 4 and 6 cells: (1,2),(2,1),(1,4),(2,2),(4,1),(1,6),(2,3),(3,2),(6,1)
    CHECK(reports.size() == 9);
    for (std::size_t i = 1; i < reports.size(); ++i)
        CHECK(reports[i - 1].order <= reports[i].order);

    auto find = [&](int m1, int m2) -> const PhReport& {
        for (const auto& r : reports)
            if (r.parameters == std::vector<int>{m1, m2}) return r;
        throw std::runtime_error("missing report");
    };
    CHECK(find(2, 2).verdict == PhVerdict::ph_confirmed_at_scope);
    CHECK(find(2, 3).verdict == PhVerdict::ph_confirmed_at_scope);
    CHECK(find(1, 2).verdict == PhVerdict::not_ph);
    // (3,2) is the open-question board: the verdict is a finding, so only
    // require that the run was exhaustive and conclusive
    CHECK(find(3, 2).pairings_tested == 15);
    CHECK(find(3, 2).inconclusive == 0);

    CHECK_THROWS_AS(explore_bishop_on_rook(14, base), invalid_parameter);
}
