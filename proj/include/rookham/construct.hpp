#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rookham/cycle.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"
#include "rookham/search.hpp"

namespace rookham {

// Constructive extenders for the rook and complete-bipartite families.
// Every returned cycle is checked against verify_extension before it leaves
// this module.

// Plan for the split-column route on rook(4, m2), m2 odd: some column is
// not internally matched, so it is cut off, its unmatched cells are paired
// up, and the crossing pairs are short-circuited into the remainder.
struct SplitColumnPlan {
    int split_col = 0; // first column with fewer than 2 induced pairs

    // completion of the column's induced pairs to a perfect matching of its
    // four cells (always 2 pairs)
    std::vector<VertexPair> column_matching;

    // the column's own induced pair, when it has exactly one
    std::optional<VertexPair> induced_pair;

    // one bridge per matching edge added by the completion: x and y are the
    // outside partners of the added edge's endpoints
    struct Bridge {
        VertexPair added;
        Vertex x, y;
    };
    std::vector<Bridge> bridges;
};

SplitColumnPlan make_split_column_plan(int m2, const Pairing& m);
HamCycle split_column_extend(int m2, const Pairing& m, const SplitColumnPlan& plan,
                             const SearchOptions& search = {});

// Plan for the matched-columns route: every column of rook(4, m2) is
// internally matched. Row/column permutations normalize the instance so
// the class counts are non-increasing and equal classes are contiguous.
struct MatchedColumnsPlan {
    ColumnClassProfile profile;      // of the input pairing
    std::array<int, 4> row_perm{};   // row_perm[old_row] = normalized row
    std::vector<int> col_perm;       // col_perm[old_col] = normalized col
    std::array<std::uint32_t, 3> sorted_counts{}; // non-increasing
    int r = 0;        // columns whose class pairs row 0 with row 1 or 2
    int r_prime = 0;  // largest even integer <= r

    // the middle-rows paths to splice (normalized coordinates), with the
    // outside partners of their end-vertices; empty when the leading count
    // is 1 or 2 and a fixed cycle is emitted instead
    struct PathSplice {
        std::vector<Vertex> path; // front() pairs with x, back() pairs with y
        Vertex x, y;
    };
    std::vector<PathSplice> paths;
};

MatchedColumnsPlan make_matched_columns_plan(int m2, const Pairing& m,
                                             const ColumnClassProfile& profile);
HamCycle matched_columns_extend(int m2, const Pairing& m, const MatchedColumnsPlan& plan,
                                const SearchOptions& search = {});

// Extends any pairing of rook(4, m2), m2 odd >= 3, choosing the split-column
// or matched-columns route by classify_columns. Cannot fail.
HamCycle extend_rook4_odd(int m2, const Pairing& m, const SearchOptions& search = {});

// Extends any pairing of K_{n,n} (n >= 2) by induction on n: strip a column
// whose vertical pair is absent, reroute its two crossing pairs, recurse.
struct KnnTrace {
    int reductions = 0;             // inductive steps taken
    bool identity_shortcut = false; // hit the all-vertical fast path at some level
};
HamCycle extend_knn(int n, const Pairing& m, KnnTrace* trace = nullptr);

// Extends any pairing of K_n (n even >= 4) by chaining the pairs through
// arbitrary complete-graph edges.
HamCycle extend_complete(int n, const Pairing& m);

// Dispatcher over the whole rook family.
struct ExtendResult {
    enum class Kind { extended, nonextendable, inconclusive };
    Kind kind = Kind::inconclusive;
    std::optional<HamCycle> cycle; // set iff extended
    std::string how;               // route taken, e.g. "matched-columns", "search"
    SearchStats stats;             // search effort, when a search ran
};

ExtendResult extend_rook(int m1, int m2, const Pairing& m, const SearchOptions& search = {});

} // namespace rookham
