#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rookham/cycle.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"
#include "rookham/search.hpp"

namespace rookham {

// True iff h visits every vertex of host exactly once, every pair of m is a
// cycle edge of h, and every cycle edge of h outside m is a host edge.
bool verify_extension(const Graph& host, const Pairing& m, const HamCycle& h);

// Constructive route dispatched on the host's family (rook, complete,
// balanced bipartite, two-row bishop-on-rook). nullopt means the route
// reports the pairing nonextendable; that claim is never authoritative —
// callers re-check through the search. Throws invalid_parameter for
// families without a constructive extender.
std::optional<HamCycle> constructive_extend(const Graph& host, const Pairing& m,
                                            const SearchOptions& search = {});

enum class CheckMode { exhaustive, sampled };
enum class ExtenderChoice { constructive, search, both };

struct CheckOptions {
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t sample_count = 0; // sampled mode only
    std::uint64_t seed = 0;         // sampled mode only
    ExtenderChoice extender = ExtenderChoice::search;
    SearchOptions search;
    int workers = 1;               // 0 = hardware concurrency
    int max_exhaustive_order = 12; // larger graphs must use sampled mode
};

enum class PhVerdict { ph_confirmed_at_scope, not_ph, sampled_no_counterexample, inconclusive };

std::string to_string(PhVerdict v);
std::string to_string(ExtenderChoice e);

struct PhReport {
    std::string family;
    std::vector<int> parameters;
    int order = 0;
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    ExtenderChoice extender = ExtenderChoice::search;

    std::uint64_t pairings_tested = 0;
    std::uint64_t extended = 0;
    std::uint64_t inconclusive = 0;      // budget hits and both-mode disagreements
    std::vector<Pairing> failures;       // search-certified nonextendable pairings
    std::vector<Pairing> disagreements;  // construct vs search mismatches (always a bug)
    std::uint64_t escalations = 0;       // constructive failures retried through search

    PhVerdict verdict = PhVerdict::inconclusive;
    std::optional<Pairing> witness; // first nonextendable pairing, if any
    double wall_time = 0.0;         // seconds
};

// Runs the chosen extender over all (or sampled) pairings of host, verifies
// every returned cycle, and aggregates. Every nonextendable record is
// backed by an exhausted search; a constructive failure alone never decides.
PhReport check_ph(const Graph& host, const CheckOptions& options = {});

// Exhaustively checks every bishop-on-rook board with m1*m2 even and
// m1*m2 <= max_order; reports sorted by order, then (m1, m2).
std::vector<PhReport> explore_bishop_on_rook(int max_order, const CheckOptions& base = {});

} // namespace rookham
