#include "rookham/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rookham/checker.hpp"
#include "rookham/errors.hpp"

namespace rookham {

namespace {

Pairing map_pairing(const Pairing& m, const std::function<Vertex(Vertex)>& f) {
    std::vector<VertexPair> pairs;
    pairs.reserve(m.size());
    for (const auto& pr : m.pairs()) pairs.push_back({f(pr.first), f(pr.second)});
    return Pairing::of_pairs(std::move(pairs));
}

HamCycle map_cycle(const HamCycle& h, const std::function<Vertex(Vertex)>& f) {
    HamCycle out;
    out.order.reserve(h.order.size());
    for (const Vertex& v : h.order) out.order.push_back(f(v));
    return out;
}

Vertex transpose(Vertex v) { return {v.col, v.row}; }

// Replaces each keyed edge of `base` with a vertex run; seq is oriented to
// follow run.x. Every run must be spent.
struct SpliceRun {
    Vertex x;
    std::vector<Vertex> seq;
};

HamCycle splice_cycle(const HamCycle& base, const std::map<VertexPair, SpliceRun>& runs) {
    HamCycle out;
    const auto& ord = base.order;
    const std::size_t n = ord.size();
    std::size_t spent = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Vertex a = ord[i];
        Vertex b = ord[(i + 1) % n];
        out.order.push_back(a);
        auto it = runs.find(ordered_pair(a, b));
        if (it == runs.end()) continue;
        ++spent;
        const SpliceRun& run = it->second;
        if (a == run.x) {
            out.order.insert(out.order.end(), run.seq.begin(), run.seq.end());
        } else {
            out.order.insert(out.order.end(), run.seq.rbegin(), run.seq.rend());
        }
    }
    if (spent != runs.size())
        throw internal_error("splice target edge missing from cycle");
    return out;
}

void require_pairing_of(const Graph& g, const Pairing& m, const char* who) {
    if (!m.covers_exactly(g))
        throw invalid_parameter(std::string(who) + ": not a pairing of the graph's vertex set");
}

} // namespace

HamCycle extend_complete(int n, const Pairing& m) {
    if (n < 4 || n % 2 != 0)
        throw invalid_parameter("extend_complete: needs even n >= 4");
    Graph g = build_complete(n);
    require_pairing_of(g, m, "extend_complete");
    HamCycle h;
    h.order.reserve(static_cast<std::size_t>(n));
    for (const auto& pr : m.pairs()) {
        h.order.push_back(pr.first);
        h.order.push_back(pr.second);
    }
    if (!verify_extension(g, m, h)) throw internal_error("extend_complete produced a bad cycle");
    return h;
}

// ---------------------------------------------------------------------------
// Complete bipartite graphs

namespace {

HamCycle knn_base2(const Pairing& m) {
    // the three pairings of four vertices on a 2x2 board
    auto cyc = [](std::initializer_list<Vertex> vs) {
        HamCycle h;
        h.order.assign(vs);
        return h;
    };
    if (m.contains({{0, 0}, {1, 0}})) return cyc({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    if (m.contains({{0, 0}, {1, 1}})) return cyc({{0, 0}, {1, 1}, {0, 1}, {1, 0}});
    return cyc({{0, 0}, {0, 1}, {1, 0}, {1, 1}}); // both pairs horizontal
}

HamCycle knn_rec(int n, const Pairing& m, KnnTrace* trace) {
    if (n == 2) return knn_base2(m);

    bool all_vertical = true;
    for (int c = 0; c < n && all_vertical; ++c)
        all_vertical = m.contains({{0, c}, {1, c}});
    if (all_vertical) {
        if (trace) trace->identity_shortcut = true;
        HamCycle h;
        for (int c = 0; c < n; ++c) {
            h.order.push_back({0, c});
            h.order.push_back({1, c});
        }
        return h;
    }

    int j = 0;
    while (m.contains({{0, j}, {1, j}})) ++j;
    // swap columns j and n-1 so the stripped column is the last one
    auto swap_col = [j, n](Vertex v) {
        if (v.col == j) v.col = n - 1;
        else if (v.col == n - 1) v.col = j;
        return v;
    };
    Pairing ms = map_pairing(m, swap_col);

    Vertex top{0, n - 1}, bottom{1, n - 1};
    Vertex x = *ms.partner(top);
    Vertex y = *ms.partner(bottom);

    std::vector<VertexPair> reduced;
    reduced.reserve(ms.size() - 1);
    for (const auto& pr : ms.pairs()) {
        if (pr.first == top || pr.first == bottom || pr.second == top || pr.second == bottom)
            continue;
        reduced.push_back(pr);
    }
    reduced.push_back({x, y});

    if (trace) ++trace->reductions;
    HamCycle sub = knn_rec(n - 1, Pairing::of_pairs(std::move(reduced)), trace);

    std::map<VertexPair, SpliceRun> runs;
    runs.emplace(ordered_pair(x, y), SpliceRun{x, {top, bottom}});
    return map_cycle(splice_cycle(sub, runs), swap_col);
}

} // namespace

HamCycle extend_knn(int n, const Pairing& m, KnnTrace* trace) {
    if (n < 2) throw invalid_parameter("extend_knn: needs n >= 2");
    Graph g = build_complete_bipartite(n, n);
    require_pairing_of(g, m, "extend_knn");
    KnnTrace local;
    HamCycle h = knn_rec(n, m, trace ? trace : &local);
    if (!verify_extension(g, m, h)) throw internal_error("extend_knn produced a bad cycle");
    return h;
}

// ---------------------------------------------------------------------------
// rook(4, m2) with m2 odd: split-column route

SplitColumnPlan make_split_column_plan(int m2, const Pairing& m) {
    if (m2 < 3 || m2 % 2 == 0)
        throw invalid_parameter("split-column plan: needs odd m2 >= 3");
    Graph g = build_rook(4, m2);
    require_pairing_of(g, m, "split-column plan");

    std::vector<std::vector<VertexPair>> induced(static_cast<std::size_t>(m2));
    for (const auto& pr : m.pairs())
        if (pr.first.col == pr.second.col && pr.first.col < m2)
            induced[static_cast<std::size_t>(pr.first.col)].push_back(pr);

    int split = -1;
    for (int c = 0; c < m2; ++c)
        if (induced[static_cast<std::size_t>(c)].size() < 2) {
            split = c;
            break;
        }
    if (split < 0)
        throw invalid_parameter("split-column plan: every column is internally matched");

    SplitColumnPlan plan;
    plan.split_col = split;
    const auto& in_col = induced[static_cast<std::size_t>(split)];
    if (in_col.size() == 1) plan.induced_pair = in_col.front();

    std::vector<Vertex> unmatched;
    for (int row = 0; row < 4; ++row) {
        Vertex cell{row, split};
        bool matched_inside = false;
        for (const auto& pr : in_col)
            matched_inside |= (pr.first == cell || pr.second == cell);
        if (!matched_inside) unmatched.push_back(cell);
    }
    if (unmatched.size() != 2 && unmatched.size() != 4)
        throw internal_error("split column must have two or four unmatched cells");

    plan.column_matching = in_col;
    // lexicographically least completion of the column's matching
    for (std::size_t i = 0; i + 1 < unmatched.size(); i += 2) {
        VertexPair added{unmatched[i], unmatched[i + 1]};
        plan.column_matching.push_back(added);
        SplitColumnPlan::Bridge bridge;
        bridge.added = added;
        bridge.x = *m.partner(added.first);
        bridge.y = *m.partner(added.second);
        if (bridge.x.col == split || bridge.y.col == split)
            throw internal_error("unmatched cell's partner should leave the column");
        plan.bridges.push_back(bridge);
    }
    std::sort(plan.column_matching.begin(), plan.column_matching.end());
    return plan;
}

HamCycle split_column_extend(int m2, const Pairing& m, const SplitColumnPlan& plan,
                             const SearchOptions& search) {
    if (m2 < 3 || m2 % 2 == 0)
        throw invalid_parameter("split-column extension: needs odd m2 >= 3");
    Graph g = build_rook(4, m2);
    require_pairing_of(g, m, "split-column extension");
    if (plan.bridges.empty() || plan.bridges.size() > 2 ||
        (plan.bridges.size() == 1) != plan.induced_pair.has_value())
        throw internal_error("split-column plan is inconsistent");
    if (plan.induced_pair && !m.contains(*plan.induced_pair))
        throw internal_error("split-column plan disagrees with the pairing");

    const int split = plan.split_col;

    // pairing of the board without the split column: keep the pairs that
    // stay outside, short-circuit each crossing pair through its bridge
    std::vector<VertexPair> rest;
    for (const auto& pr : m.pairs())
        if (pr.first.col != split && pr.second.col != split) rest.push_back(pr);
    for (const auto& bridge : plan.bridges) rest.push_back({bridge.x, bridge.y});

    auto to_sub = [split](Vertex v) {
        return Vertex{v.row, v.col - (v.col > split ? 1 : 0)};
    };
    auto from_sub = [split](Vertex v) {
        return Vertex{v.row, v.col + (v.col >= split ? 1 : 0)};
    };

    ExtendResult sub = extend_rook(4, m2 - 1, map_pairing(Pairing::of_pairs(rest), to_sub), search);
    if (sub.kind != ExtendResult::Kind::extended)
        throw internal_error("even-width remainder failed to extend");
    HamCycle base = map_cycle(*sub.cycle, from_sub);

    // route the cycle through the split column at each bridge
    std::map<VertexPair, SpliceRun> runs;
    for (const auto& bridge : plan.bridges) {
        SpliceRun run;
        run.x = bridge.x;
        run.seq.push_back(bridge.added.first);
        if (plan.induced_pair) {
            run.seq.push_back(plan.induced_pair->first);
            run.seq.push_back(plan.induced_pair->second);
        }
        run.seq.push_back(bridge.added.second);
        runs.emplace(ordered_pair(bridge.x, bridge.y), std::move(run));
    }
    HamCycle h = splice_cycle(base, runs);
    if (!verify_extension(g, m, h))
        throw internal_error("split-column extension produced a bad cycle");
    return h;
}

// ---------------------------------------------------------------------------
// rook(4, m2) with m2 odd: matched-columns route

namespace {

// partitions of the four rows by class: {0,a} with {b,c}
constexpr int class_partner_of_row0[3] = {1, 2, 3};

ColumnClass class_after_row_perm(ColumnClass cls, const std::array<int, 4>& perm) {
    int a = class_partner_of_row0[static_cast<int>(cls)];
    // the pair {0, a} maps to {perm[0], perm[a]}, the other two rows follow
    int p0 = perm[0];
    int pa = perm[static_cast<std::size_t>(a)];
    int mate;
    if (p0 == 0) {
        mate = pa;
    } else if (pa == 0) {
        mate = p0;
    } else {
        // row 0 sits in the image of the other part
        std::vector<int> rest;
        for (int r = 1; r < 4; ++r)
            if (r != a) rest.push_back(perm[static_cast<std::size_t>(r)]);
        mate = (rest[0] == 0) ? rest[1] : rest[0];
    }
    switch (mate) {
        case 1: return ColumnClass::rows01_23;
        case 2: return ColumnClass::rows02_13;
        default: return ColumnClass::rows03_12;
    }
}

constexpr int kRowB = 1;
constexpr int kRowC = 2;

struct MiddleCycle {
    std::vector<Vertex> order;       // the canonical cycle through rows 1 and 2
    std::vector<VertexPair> matching; // its pairing, built from the class layout
};

MiddleCycle middle_rows_cycle(int m, int r_prime) {
    MiddleCycle mid;
    for (int c = 0; c < r_prime; ++c) mid.order.push_back({kRowB, c});
    bool down = true;
    for (int c = r_prime; c < m; ++c) {
        if (down) {
            mid.order.push_back({kRowB, c});
            mid.order.push_back({kRowC, c});
        } else {
            mid.order.push_back({kRowC, c});
            mid.order.push_back({kRowB, c});
        }
        down = !down;
    }
    for (int c = r_prime - 1; c >= 0; --c) mid.order.push_back({kRowC, c});

    for (int c = 0; c + 1 < r_prime; c += 2) {
        mid.matching.push_back({{kRowB, c}, {kRowB, c + 1}});
        mid.matching.push_back({{kRowC, c}, {kRowC, c + 1}});
    }
    for (int c = r_prime; c < m; ++c) mid.matching.push_back({{kRowB, c}, {kRowC, c}});
    return mid;
}

// fixed extensions for the small leading counts, in normalized coordinates
HamCycle fixed_cycle_111() {
    return {{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 2}, {0, 2},
             {2, 2}, {1, 2}, {1, 1}, {3, 1}, {2, 1}, {0, 1}}};
}

HamCycle fixed_cycle_210() {
    return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}, {2, 2},
             {1, 2}, {3, 2}, {3, 1}, {2, 1}, {2, 0}, {3, 0}}};
}

HamCycle fixed_cycle_221() {
    return {{{0, 0}, {1, 0}, {1, 4}, {2, 4}, {2, 2}, {0, 2}, {0, 1},
             {1, 1}, {1, 2}, {3, 2}, {3, 4}, {0, 4}, {0, 3}, {2, 3},
             {1, 3}, {3, 3}, {3, 1}, {2, 1}, {2, 0}, {3, 0}}};
}

} // namespace

MatchedColumnsPlan make_matched_columns_plan(int m2, const Pairing& m,
                                             const ColumnClassProfile& profile) {
    if (m2 < 3 || m2 % 2 == 0)
        throw invalid_parameter("matched-columns plan: needs odd m2 >= 3");
    if (profile.column_class.size() != static_cast<std::size_t>(m2) ||
        profile.counts[0] + profile.counts[1] + profile.counts[2] != static_cast<std::uint32_t>(m2))
        throw invalid_parameter("matched-columns plan: profile does not fit the board");

    MatchedColumnsPlan plan;
    plan.profile = profile;

    // first row permutation (in lexicographic order) making the class
    // counts non-increasing
    std::array<int, 4> perm{0, 1, 2, 3};
    bool found = false;
    do {
        std::array<std::uint32_t, 3> counts{};
        for (int cls = 0; cls < 3; ++cls) {
            ColumnClass moved = class_after_row_perm(static_cast<ColumnClass>(cls), perm);
            counts[static_cast<std::size_t>(moved)] += profile.counts[static_cast<std::size_t>(cls)];
        }
        if (counts[0] >= counts[1] && counts[1] >= counts[2]) {
            plan.row_perm = perm;
            plan.sorted_counts = counts;
            found = true;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!found) throw internal_error("no row permutation sorts the class counts");

    // stable column order: by normalized class, ties keep board order
    std::vector<int> cols(static_cast<std::size_t>(m2));
    std::iota(cols.begin(), cols.end(), 0);
    auto normalized_class = [&](int c) {
        return class_after_row_perm(profile.column_class[static_cast<std::size_t>(c)],
                                    plan.row_perm);
    };
    std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
        return static_cast<int>(normalized_class(a)) < static_cast<int>(normalized_class(b));
    });
    plan.col_perm.assign(static_cast<std::size_t>(m2), 0);
    for (int pos = 0; pos < m2; ++pos)
        plan.col_perm[static_cast<std::size_t>(cols[static_cast<std::size_t>(pos)])] = pos;

    plan.r = static_cast<int>(plan.sorted_counts[0] + plan.sorted_counts[1]);
    plan.r_prime = plan.r - (plan.r % 2);

    if (plan.sorted_counts[0] <= 2) return plan; // fixed cycle; no paths needed

    // normalized pairing
    auto normalize = [&](Vertex v) {
        return Vertex{plan.row_perm[static_cast<std::size_t>(v.row)],
                      plan.col_perm[static_cast<std::size_t>(v.col)]};
    };
    Pairing norm = map_pairing(m, normalize);

    MiddleCycle mid = middle_rows_cycle(m2, plan.r_prime);

    // the middle matching must contain the pairing's own middle-row pairs
    for (const auto& pr : norm.pairs())
        if (pr.first.row != 0 && pr.first.row != 3 && pr.second.row != 0 && pr.second.row != 3)
            if (std::find(mid.matching.begin(), mid.matching.end(),
                          ordered_pair(pr.first, pr.second)) == mid.matching.end())
                throw internal_error("middle matching misses a pairing edge");

    // drop the matching edges that are not pairing edges; the cycle falls
    // apart into paths whose ends are exactly the first r columns' cells
    std::map<Vertex, std::vector<Vertex>> kept;
    auto keep_edge = [&](Vertex a, Vertex b) {
        kept[a].push_back(b);
        kept[b].push_back(a);
    };
    const std::size_t len = mid.order.size();
    for (std::size_t i = 0; i < len; ++i) {
        Vertex a = mid.order[i];
        Vertex b = mid.order[(i + 1) % len];
        VertexPair e = ordered_pair(a, b);
        bool in_matching =
            std::find(mid.matching.begin(), mid.matching.end(), e) != mid.matching.end();
        if (in_matching && !norm.contains(e)) continue; // deleted
        keep_edge(a, b);
    }

    std::vector<Vertex> ends;
    for (const auto& [v, nb] : kept)
        if (nb.size() == 1) ends.push_back(v);
    std::sort(ends.begin(), ends.end());
    if (ends.size() != 2 * static_cast<std::size_t>(plan.r))
        throw internal_error("unexpected number of path ends");

    std::set<Vertex> consumed;
    for (const Vertex& start : ends) {
        if (consumed.contains(start)) continue;
        MatchedColumnsPlan::PathSplice splice;
        Vertex prev = start;
        Vertex cur = start;
        splice.path.push_back(cur);
        consumed.insert(cur);
        while (true) {
            const auto& nb = kept[cur];
            Vertex next = (cur == start) ? nb[0] : (nb[0] == prev ? nb[1] : nb[0]);
            prev = cur;
            cur = next;
            splice.path.push_back(cur);
            consumed.insert(cur);
            if (kept[cur].size() == 1) break; // the far end
        }
        splice.x = *norm.partner(splice.path.front());
        splice.y = *norm.partner(splice.path.back());
        if ((splice.x.row != 0 && splice.x.row != 3) || (splice.y.row != 0 && splice.y.row != 3))
            throw internal_error("path end partners must lie in the outer rows");
        plan.paths.push_back(std::move(splice));
    }

    // the path-end partners must use up exactly the outer cells of the
    // first r columns
    std::vector<Vertex> partners;
    for (const auto& p : plan.paths) {
        partners.push_back(p.x);
        partners.push_back(p.y);
    }
    std::sort(partners.begin(), partners.end());
    std::vector<Vertex> expected;
    for (int c = 0; c < plan.r; ++c) {
        expected.push_back({0, c});
        expected.push_back({3, c});
    }
    std::sort(expected.begin(), expected.end());
    if (partners != expected)
        throw internal_error("path end partners do not match the outer rows of the first r columns");

    return plan;
}

HamCycle matched_columns_extend(int m2, const Pairing& m, const MatchedColumnsPlan& plan,
                                const SearchOptions& search) {
    Graph g = build_rook(4, m2);
    require_pairing_of(g, m, "matched-columns extension");

    auto normalize = [&](Vertex v) {
        return Vertex{plan.row_perm[static_cast<std::size_t>(v.row)],
                      plan.col_perm[static_cast<std::size_t>(v.col)]};
    };
    std::array<int, 4> row_inv{};
    for (int r = 0; r < 4; ++r) row_inv[static_cast<std::size_t>(plan.row_perm[static_cast<std::size_t>(r)])] = r;
    std::vector<int> col_inv(plan.col_perm.size());
    for (std::size_t c = 0; c < plan.col_perm.size(); ++c)
        col_inv[static_cast<std::size_t>(plan.col_perm[c])] = static_cast<int>(c);
    auto denormalize = [&](Vertex v) {
        return Vertex{row_inv[static_cast<std::size_t>(v.row)],
                      col_inv[static_cast<std::size_t>(v.col)]};
    };

    Pairing norm = map_pairing(m, normalize);
    HamCycle normalized_cycle;

    if (plan.sorted_counts[0] == 1) {
        normalized_cycle = fixed_cycle_111();
    } else if (plan.sorted_counts[0] == 2 && plan.sorted_counts[2] == 0) {
        normalized_cycle = fixed_cycle_210();
    } else if (plan.sorted_counts[0] == 2) {
        normalized_cycle = fixed_cycle_221();
    } else {
        // outer-rows pairing: partner pairs of the path ends plus the
        // pairing's own outer verticals
        std::vector<VertexPair> outer;
        for (const auto& p : plan.paths) outer.push_back({p.x, p.y});
        for (const auto& pr : norm.pairs())
            if ((pr.first.row == 0 || pr.first.row == 3) &&
                (pr.second.row == 0 || pr.second.row == 3))
                outer.push_back(pr);
        Pairing outer_pairing = Pairing::of_pairs(std::move(outer));

        // rows {0,3} form a 2 x m2 rook board; the forced search extends
        // the outer pairing there
        auto to_two_rows = [](Vertex v) { return Vertex{v.row == 0 ? 0 : 1, v.col}; };
        auto from_two_rows = [](Vertex v) { return Vertex{v.row == 0 ? 0 : 3, v.col}; };
        Graph two_rows = build_rook(2, m2);
        Pairing forced = map_pairing(outer_pairing, to_two_rows);
        if (!forced.covers_exactly(two_rows))
            throw internal_error("outer pairing does not cover the outer rows");
        SearchResult sr = extend_by_search(two_rows, forced, search);
        if (sr.outcome != SearchOutcome::extendable)
            throw internal_error("outer-rows pairing failed to extend");
        HamCycle outer_cycle = map_cycle(*sr.cycle, from_two_rows);

        std::map<VertexPair, SpliceRun> runs;
        for (const auto& p : plan.paths)
            runs.emplace(ordered_pair(p.x, p.y), SpliceRun{p.x, p.path});
        normalized_cycle = splice_cycle(outer_cycle, runs);
    }

    HamCycle h = map_cycle(normalized_cycle, denormalize);
    if (!verify_extension(g, m, h))
        throw internal_error("matched-columns extension produced a bad cycle");
    return h;
}

HamCycle extend_rook4_odd(int m2, const Pairing& m, const SearchOptions& search) {
    if (m2 < 3 || m2 % 2 == 0)
        throw invalid_parameter("extend_rook4_odd: needs odd m2 >= 3");
    Graph g = build_rook(4, m2);
    require_pairing_of(g, m, "extend_rook4_odd");
    auto profile = classify_columns(g, m);
    if (!profile) return split_column_extend(m2, m, make_split_column_plan(m2, m), search);
    return matched_columns_extend(m2, m, make_matched_columns_plan(m2, m, *profile), search);
}

ExtendResult extend_rook(int m1, int m2, const Pairing& m, const SearchOptions& search) {
    if (m1 < 1 || m2 < 1) throw invalid_parameter("extend_rook: needs m1, m2 >= 1");
    if (m1 % 2 == 1 && m2 % 2 == 1)
        throw no_pairing_exists("extend_rook: odd-order board has no pairing");
    if (m1 % 2 == 1) {
        // work on the transposed board, which has an even row count
        ExtendResult result = extend_rook(m2, m1, map_pairing(m, transpose), search);
        if (result.cycle) result.cycle = map_cycle(*result.cycle, transpose);
        return result;
    }

    Graph g = build_rook(m1, m2);
    require_pairing_of(g, m, "extend_rook");

    ExtendResult result;
    if (m1 == 2 && m2 % 2 == 1) {
        if (m2 >= 3 && m == cut_pairing(m2)) {
            result.kind = ExtendResult::Kind::nonextendable;
            result.how = "cut-pairing";
            return result;
        }
        SearchResult sr = extend_by_search(g, m, search);
        result.stats = sr.stats;
        result.how = "search";
        switch (sr.outcome) {
            case SearchOutcome::extendable:
                result.kind = ExtendResult::Kind::extended;
                result.cycle = std::move(sr.cycle);
                break;
            case SearchOutcome::nonextendable:
                result.kind = ExtendResult::Kind::nonextendable;
                break;
            case SearchOutcome::inconclusive:
                result.kind = ExtendResult::Kind::inconclusive;
                break;
        }
        return result;
    }

    if (m2 == 1) {
        // a single column is just the complete graph on the rows
        HamCycle h = extend_complete(m1, map_pairing(m, transpose));
        result.kind = ExtendResult::Kind::extended;
        result.cycle = map_cycle(h, transpose);
        result.how = "complete-chain";
        return result;
    }

    if (m1 == 4 && m2 % 2 == 1) {
        result.kind = ExtendResult::Kind::extended;
        result.cycle = extend_rook4_odd(m2, m, search);
        result.how = "rook4-odd";
        return result;
    }

    // all remaining even-parameter cases are guaranteed extendable; the
    // exact search stands in for the constructive proofs there
    SearchResult sr = extend_by_search(g, m, search);
    result.stats = sr.stats;
    result.how = "search";
    switch (sr.outcome) {
        case SearchOutcome::extendable:
            result.kind = ExtendResult::Kind::extended;
            result.cycle = std::move(sr.cycle);
            break;
        case SearchOutcome::nonextendable:
            result.kind = ExtendResult::Kind::nonextendable;
            break;
        case SearchOutcome::inconclusive:
            result.kind = ExtendResult::Kind::inconclusive;
            break;
    }
    return result;
}

} // namespace rookham
