#include "rookham/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "rookham/construct.hpp"
#include "rookham/errors.hpp"

namespace rookham {

std::string to_string(PhVerdict v) {
    switch (v) {
        case PhVerdict::ph_confirmed_at_scope: return "PH-confirmed-at-scope";
        case PhVerdict::not_ph: return "not-PH";
        case PhVerdict::sampled_no_counterexample: return "sampled-no-counterexample";
        case PhVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(ExtenderChoice e) {
    switch (e) {
        case ExtenderChoice::constructive: return "constructive";
        case ExtenderChoice::search: return "search";
        case ExtenderChoice::both: return "both";
    }
    return "search";
}

bool verify_extension(const Graph& host, const Pairing& m, const HamCycle& h) {
    const std::size_t n = static_cast<std::size_t>(host.order());
    if (h.order.size() != n || n < 3) return false;

    std::vector<Vertex> visited = h.order;
    std::sort(visited.begin(), visited.end());
    if (visited != host.vertices()) return false;

    std::vector<VertexPair> cycle_edges = h.edge_list();
    std::sort(cycle_edges.begin(), cycle_edges.end());
    for (const auto& pr : m.pairs())
        if (!std::binary_search(cycle_edges.begin(), cycle_edges.end(), pr)) return false;
    for (const auto& e : cycle_edges)
        if (!m.contains(e) && !host.adjacent(e.first, e.second)) return false;
    return true;
}

std::optional<HamCycle> constructive_extend(const Graph& host, const Pairing& m,
                                            const SearchOptions& search) {
    if (host.order() == 2) return std::nullopt; // no cycle on two vertices
    const Family& fam = host.family();
    switch (fam.kind) {
        case FamilyKind::rook: {
            ExtendResult res = extend_rook(fam.m1, fam.m2, m, search);
            if (res.kind == ExtendResult::Kind::extended) return res.cycle;
            return std::nullopt;
        }
        case FamilyKind::complete:
            return extend_complete(fam.m1, m);
        case FamilyKind::complete_bipartite:
            if (fam.m1 == fam.m2) return extend_knn(fam.m1, m);
            throw invalid_parameter("no constructive extender for unbalanced bipartite graphs");
        case FamilyKind::bishop_on_rook:
            // two board rows make the two sides of a complete bipartite graph
            if (fam.m1 == 2) return extend_knn(fam.m2, m);
            throw invalid_parameter("no constructive extender for bishop-on-rook with more than two rows");
        default:
            throw invalid_parameter("no constructive extender for family '" + fam.token() + "'");
    }
}

namespace {

enum class SlotKind { extended, nonextendable, inconclusive, disagreement };

struct Slot {
    SlotKind kind = SlotKind::inconclusive;
    bool escalated = false;
};

Slot run_one(const Graph& host, const Pairing& m, const CheckOptions& options) {
    Slot slot;
    const bool want_construct = options.extender != ExtenderChoice::search;

    std::optional<HamCycle> constructed;
    bool construct_ok = false;
    if (want_construct) {
        constructed = constructive_extend(host, m, options.search);
        construct_ok = constructed && verify_extension(host, m, *constructed);
    }

    if (options.extender == ExtenderChoice::constructive) {
        if (construct_ok) {
            slot.kind = SlotKind::extended;
            return slot;
        }
        // the constructive route failed: the search is authoritative
        slot.escalated = true;
        SearchResult sr = extend_by_search(host, m, options.search);
        switch (sr.outcome) {
            case SearchOutcome::extendable:
                // extendable after all — a constructive bug worth shouting about
                slot.kind = SlotKind::disagreement;
                break;
            case SearchOutcome::nonextendable:
                slot.kind = SlotKind::nonextendable;
                break;
            case SearchOutcome::inconclusive:
                slot.kind = SlotKind::inconclusive;
                break;
        }
        return slot;
    }

    SearchResult sr = extend_by_search(host, m, options.search);
    bool search_ok = sr.outcome == SearchOutcome::extendable &&
                     sr.cycle && verify_extension(host, m, *sr.cycle);

    if (options.extender == ExtenderChoice::search) {
        if (search_ok) slot.kind = SlotKind::extended;
        else if (sr.outcome == SearchOutcome::nonextendable) slot.kind = SlotKind::nonextendable;
        else slot.kind = SlotKind::inconclusive;
        return slot;
    }

    // both: any mismatch is a hard failure
    if (sr.outcome == SearchOutcome::inconclusive) {
        slot.kind = SlotKind::inconclusive;
    } else if (construct_ok && search_ok) {
        slot.kind = SlotKind::extended;
    } else if (!construct_ok && sr.outcome == SearchOutcome::nonextendable) {
        slot.kind = SlotKind::nonextendable;
    } else {
        slot.kind = SlotKind::disagreement;
    }
    return slot;
}

} // namespace

PhReport check_ph(const Graph& host, const CheckOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    if (host.order() % 2 != 0)
        throw no_pairing_exists("check_ph: odd-order graph has no pairing");

    PhReport report;
    const Family& fam = host.family();
    report.family = fam.token();
    switch (fam.kind) {
        case FamilyKind::complete:
        case FamilyKind::path:
        case FamilyKind::hypercube:
            report.parameters = {fam.m1};
            break;
        case FamilyKind::complete_bipartite:
        case FamilyKind::rook:
        case FamilyKind::bishop_on_rook:
            report.parameters = {fam.m1, fam.m2};
            break;
        default:
            break;
    }
    report.order = host.order();
    report.mode = options.mode;
    report.extender = options.extender;

    std::vector<Pairing> pairings;
    if (options.mode == CheckMode::exhaustive) {
        if (host.order() > options.max_exhaustive_order)
            throw invalid_parameter("graph too large for exhaustive mode; use sampled mode");
        pairings = all_pairings(host);
    } else {
        report.sample_count = options.sample_count;
        report.seed = options.seed;
        std::mt19937_64 rng(options.seed);
        pairings.reserve(options.sample_count);
        for (std::uint64_t i = 0; i < options.sample_count; ++i)
            pairings.push_back(random_pairing(host, rng));
    }
    report.pairings_tested = pairings.size();

    std::vector<Slot> slots(pairings.size());
    unsigned workers = options.workers > 0 ? static_cast<unsigned>(options.workers)
                                           : std::max(1u, std::thread::hardware_concurrency());
    const std::size_t worker_cap = pairings.empty() ? 1 : pairings.size();
    if (workers > worker_cap) workers = static_cast<unsigned>(worker_cap);

    if (workers <= 1) {
        for (std::size_t i = 0; i < pairings.size(); ++i)
            slots[i] = run_one(host, pairings[i], options);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto work = [&] {
            std::size_t i;
            while ((i = cursor.fetch_add(1)) < pairings.size()) {
                try {
                    slots[i] = run_one(host, pairings[i], options);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    cursor.store(pairings.size());
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    // merge in enumeration order for a deterministic report
    for (std::size_t i = 0; i < slots.size(); ++i) {
        switch (slots[i].kind) {
            case SlotKind::extended:
                ++report.extended;
                break;
            case SlotKind::nonextendable:
                report.failures.push_back(pairings[i]);
                break;
            case SlotKind::inconclusive:
                ++report.inconclusive;
                break;
            case SlotKind::disagreement:
                report.disagreements.push_back(pairings[i]);
                ++report.inconclusive;
                break;
        }
        if (slots[i].escalated) ++report.escalations;
    }

    if (!report.failures.empty()) {
        report.verdict = PhVerdict::not_ph;
        report.witness = report.failures.front();
    } else if (report.inconclusive > 0) {
        report.verdict = PhVerdict::inconclusive;
    } else if (options.mode == CheckMode::exhaustive) {
        report.verdict = PhVerdict::ph_confirmed_at_scope;
    } else {
        report.verdict = PhVerdict::sampled_no_counterexample;
    }

    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<PhReport> explore_bishop_on_rook(int max_order, const CheckOptions& base) {
    if (max_order < 2) throw invalid_parameter("explore: max order must be at least 2");
    if (max_order > base.max_exhaustive_order)
        throw invalid_parameter("explore: max order exceeds the exhaustive bound");
    std::vector<PhReport> reports;
    for (int total = 2; total <= max_order; total += 2) {
        for (int m1 = 1; m1 <= total; ++m1) {
            if (total % m1 != 0) continue;
            int m2 = total / m1;
            CheckOptions options = base;
            options.mode = CheckMode::exhaustive;
            reports.push_back(check_ph(build_bishop_on_rook(m1, m2), options));
        }
    }
    return reports;
}

} // namespace rookham
