#include "rookham/pairing.hpp"

#include <algorithm>
#include <limits>

#include "rookham/errors.hpp"

namespace rookham {

Pairing Pairing::of_pairs(std::vector<VertexPair> pairs) {
    Pairing p;
    for (auto& pr : pairs) pr = ordered_pair(pr.first, pr.second);
    std::sort(pairs.begin(), pairs.end());
    std::vector<Vertex> seen;
    seen.reserve(pairs.size() * 2);
    for (const auto& pr : pairs) {
        seen.push_back(pr.first);
        seen.push_back(pr.second);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw invalid_parameter("pairing has a repeated vertex");
    p.pairs_ = std::move(pairs);
    return p;
}

bool Pairing::contains(VertexPair pr) const {
    pr = ordered_pair(pr.first, pr.second);
    return std::binary_search(pairs_.begin(), pairs_.end(), pr);
}

std::optional<Vertex> Pairing::partner(Vertex v) const {
    for (const auto& pr : pairs_) {
        if (pr.first == v) return pr.second;
        if (pr.second == v) return pr.first;
    }
    return std::nullopt;
}

bool Pairing::covers_exactly(const Graph& ground) const {
    if (pairs_.size() * 2 != ground.vertices().size()) return false;
    std::vector<Vertex> covered;
    covered.reserve(pairs_.size() * 2);
    for (const auto& pr : pairs_) {
        covered.push_back(pr.first);
        covered.push_back(pr.second);
    }
    std::sort(covered.begin(), covered.end());
    return covered == ground.vertices();
}

std::uint64_t pairing_count(int n_vertices) {
    if (n_vertices < 0 || n_vertices % 2 != 0)
        throw no_pairing_exists("pairings exist only for even order");
    std::uint64_t count = 1;
    for (int k = n_vertices - 1; k > 1; k -= 2) count *= static_cast<std::uint64_t>(k);
    return count;
}

namespace {

void enumerate_rec(const std::vector<Vertex>& vs, std::vector<char>& used,
                   std::vector<VertexPair>& acc, bool& keep_going,
                   const std::function<bool(const Pairing&)>& fn) {
    if (!keep_going) return;
    std::size_t least = 0;
    while (least < vs.size() && used[least]) ++least;
    if (least == vs.size()) {
        // acc is already in canonical order: first components increase
        Pairing p = Pairing::of_pairs(acc);
        keep_going = fn(p);
        return;
    }
    used[least] = 1;
    for (std::size_t j = least + 1; j < vs.size() && keep_going; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        acc.push_back({vs[least], vs[j]});
        enumerate_rec(vs, used, acc, keep_going, fn);
        acc.pop_back();
        used[j] = 0;
    }
    used[least] = 0;
}

} // namespace

void enumerate_pairings(const Graph& ground, const std::function<bool(const Pairing&)>& fn) {
    if (ground.order() % 2 != 0)
        throw no_pairing_exists("graph has odd order, no pairing exists");
    std::vector<char> used(ground.vertices().size(), 0);
    std::vector<VertexPair> acc;
    acc.reserve(ground.vertices().size() / 2);
    bool keep_going = true;
    enumerate_rec(ground.vertices(), used, acc, keep_going, fn);
}

std::vector<Pairing> all_pairings(const Graph& ground) {
    std::vector<Pairing> out;
    enumerate_pairings(ground, [&](const Pairing& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Pairing random_pairing(const Graph& ground, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_pairing(ground, rng);
}

Pairing random_pairing(const Graph& ground, std::mt19937_64& rng) {
    if (ground.order() % 2 != 0)
        throw no_pairing_exists("graph has odd order, no pairing exists");
    // rejection sampling for the bounded draw keeps the stream portable
    auto draw = [&](std::uint64_t bound) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = rng();
        } while (x >= limit);
        return x % bound;
    };
    std::vector<Vertex> pool = ground.vertices(); // sorted
    std::vector<VertexPair> pairs;
    pairs.reserve(pool.size() / 2);
    while (!pool.empty()) {
        Vertex least = pool.front();
        pool.erase(pool.begin());
        std::size_t pick = static_cast<std::size_t>(draw(pool.size()));
        pairs.push_back({least, pool[pick]});
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Pairing::of_pairs(std::move(pairs));
}

bool is_perfect_matching_of(const Graph& ground, const Pairing& m) {
    if (!m.covers_exactly(ground)) return false;
    return std::all_of(m.pairs().begin(), m.pairs().end(), [&](const VertexPair& pr) {
        return ground.adjacent(pr.first, pr.second);
    });
}

Pairing cut_pairing(int m2) {
    if (m2 < 3 || m2 % 2 == 0)
        throw invalid_parameter("cut pairing is a nonextendability witness only for odd m2 >= 3");
    std::vector<VertexPair> pairs;
    pairs.reserve(static_cast<std::size_t>(m2));
    for (int c = 0; c < m2; ++c) pairs.push_back({{0, c}, {1, c}});
    return Pairing::of_pairs(std::move(pairs));
}

std::optional<ColumnClassProfile> classify_columns(const Graph& rook4, const Pairing& m) {
    const Family& fam = rook4.family();
    if (fam.kind != FamilyKind::rook || fam.m1 != 4)
        throw invalid_parameter("column classification needs a 4-row rook graph");
    if (!m.covers_exactly(rook4)) throw invalid_parameter("not a pairing of this graph");

    int m2 = fam.m2;
    ColumnClassProfile profile;
    profile.column_class.resize(static_cast<std::size_t>(m2));
    std::vector<int> pairs_in_col(static_cast<std::size_t>(m2), 0);
    for (const auto& pr : m.pairs()) {
        if (pr.first.col != pr.second.col) return std::nullopt; // pair leaves its column
        ++pairs_in_col[static_cast<std::size_t>(pr.first.col)];
    }
    for (int c = 0; c < m2; ++c)
        if (pairs_in_col[static_cast<std::size_t>(c)] != 2) return std::nullopt;

    for (const auto& pr : m.pairs()) {
        // with all pairs intra-column, the pair holding row 0 decides the class
        if (pr.first.row != 0) continue;
        ColumnClass cls;
        switch (pr.second.row) {
            case 1: cls = ColumnClass::rows01_23; break;
            case 2: cls = ColumnClass::rows02_13; break;
            default: cls = ColumnClass::rows03_12; break;
        }
        profile.column_class[static_cast<std::size_t>(pr.first.col)] = cls;
        ++profile.counts[static_cast<std::size_t>(cls)];
    }
    return profile;
}

} // namespace rookham
