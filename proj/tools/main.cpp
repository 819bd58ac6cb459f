// rookham: build the paper's board graphs, generate pairings, extend them to
// Hamiltonian cycles, certify nonextendability, and batch-check the
// pairing-extension property.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "rookham/checker.hpp"
#include "rookham/construct.hpp"
#include "rookham/errors.hpp"
#include "rookham/io.hpp"
#include "rookham/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;       // verification failed / nonextendable where a cycle was asked for
constexpr int kExitUsage = 2;        // bad flags or unparsable inputs
constexpr int kExitInconclusive = 3; // node budget exhausted

void emit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    rookham::write_text_file(path, content);
}

std::uint64_t budget_or_unlimited(std::uint64_t budget) {
    return budget == 0 ? std::numeric_limits<std::uint64_t>::max() : budget;
}

rookham::Graph build_family(const std::string& family, int m1, int m2) {
    if (family == "rook") return rookham::build_rook(m1, m2);
    if (family == "bor") return rookham::build_bishop_on_rook(m1, m2);
    if (family == "knn") return rookham::build_complete_bipartite(m1, m2 > 0 ? m2 : m1);
    if (family == "hypercube") return rookham::build_hypercube(m1);
    if (family == "complete") return rookham::build_complete(m1);
    throw rookham::invalid_parameter("unknown family '" + family + "'");
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairing extensions on rook-style boards"};
    app.require_subcommand(1);

    // gen graph / gen pairing
    auto* gen = app.add_subcommand("gen", "generate graph or pairing files");
    gen->require_subcommand(1);

    std::string family = "rook", out_path = "-";
    int m1 = 0, m2 = 0;
    auto* gen_graph = gen->add_subcommand("graph", "write a graph file");
    gen_graph->add_option("--family", family, "rook|bor|knn|hypercube|complete")->required();
    gen_graph->add_option("--m1", m1, "rows / n")->required();
    gen_graph->add_option("--m2", m2, "columns (rook, bor, knn)");
    gen_graph->add_option("-o,--output", out_path, "output file, '-' for stdout");

    std::string graph_path, pairing_out = "-";
    bool gen_all = false, gen_random = false;
    std::uint64_t seed = 0;
    auto* gen_pairing = gen->add_subcommand("pairing", "write pairing file(s) for a graph");
    gen_pairing->add_option("--graph", graph_path, "graph file")->required();
    gen_pairing->add_flag("--all", gen_all, "enumerate every pairing (output is a directory)");
    gen_pairing->add_flag("--random", gen_random, "sample one uniformly random pairing");
    gen_pairing->add_option("--seed", seed, "PRNG seed (default 0)");
    gen_pairing->add_option("-o,--output", pairing_out, "output file or directory");

    // extend
    std::string ext_graph, ext_pairing, ext_out = "-", method = "construct";
    std::uint64_t budget = 0;
    auto* extend = app.add_subcommand("extend", "extend a pairing to a Hamiltonian cycle");
    extend->add_option("--graph", ext_graph)->required();
    extend->add_option("--pairing", ext_pairing)->required();
    extend->add_option("--method", method, "construct|search (default construct)");
    extend->add_option("--budget", budget, "search node budget, 0 = unlimited");
    extend->add_option("-o,--output", ext_out, "cycle file on success, certificate JSON otherwise");

    // verify
    std::string ver_graph, ver_pairing, ver_cycle;
    auto* verify = app.add_subcommand("verify", "check a cycle against a graph and pairing");
    verify->add_option("--graph", ver_graph)->required();
    verify->add_option("--pairing", ver_pairing)->required();
    verify->add_option("--cycle", ver_cycle)->required();

    // check-ph
    std::string chk_graph, chk_out = "-", extender = "search";
    bool exhaustive = false;
    std::uint64_t sample_count = 0;
    std::uint64_t chk_seed = 0;
    std::uint64_t chk_budget = 0;
    int workers = 0;
    int exhaustive_bound = 12;
    auto* check = app.add_subcommand("check-ph", "run an extender over all or sampled pairings");
    check->add_option("--graph", chk_graph)->required();
    check->add_flag("--exhaustive", exhaustive, "test every pairing");
    check->add_option("--sample", sample_count, "number of random pairings to test");
    check->add_option("--seed", chk_seed, "PRNG seed for sampled mode (default 0)");
    check->add_option("--extender", extender, "construct|search|both (default search)");
    check->add_option("--workers", workers, "worker threads, 0 = hardware concurrency");
    check->add_option("--budget", chk_budget, "per-pairing search node budget, 0 = unlimited");
    check->add_option("--exhaustive-bound", exhaustive_bound,
                      "largest order allowed in exhaustive mode (default 12)");
    check->add_option("-o,--output", chk_out, "report JSON output");

    // certify-cut
    int cut_m2 = 0;
    std::uint64_t cut_budget = 0;
    std::string cut_out = "-";
    auto* certify = app.add_subcommand("certify-cut", "certify the vertical cut pairing of rook(2, m2)");
    certify->add_option("--m2", cut_m2, "odd board width >= 3")->required();
    certify->add_option("--budget", cut_budget, "search node budget, 0 = unlimited");
    certify->add_option("-o,--output", cut_out, "certificate JSON output");

    // explore-bor
    int max_order = 12;
    std::uint64_t bor_budget = 0;
    int bor_workers = 0;
    std::string bor_out = "-";
    auto* explore = app.add_subcommand("explore-bor", "exhaustively check small bishop-on-rook boards");
    explore->add_option("--max-order", max_order, "largest board size m1*m2 (default 12)");
    explore->add_option("--budget", bor_budget, "per-pairing search node budget, 0 = unlimited");
    explore->add_option("--workers", bor_workers, "worker threads, 0 = hardware concurrency");
    explore->add_option("-o,--output", bor_out, "report list JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen_graph->parsed()) {
            rookham::Graph g = build_family(family, m1, m2);
            std::ostringstream out;
            rookham::save_graph(out, g);
            emit(out_path, out.str());
            return kExitOk;
        }

        if (gen_pairing->parsed()) {
            rookham::Graph g = rookham::load_graph_file(graph_path);
            if (gen_all == gen_random)
                throw rookham::invalid_parameter("pick exactly one of --all / --random");
            if (gen_all) {
                if (pairing_out == "-")
                    throw rookham::invalid_parameter("--all needs -o DIRECTORY");
                std::filesystem::create_directories(pairing_out);
                std::size_t index = 0;
                rookham::enumerate_pairings(g, [&](const rookham::Pairing& p) {
                    std::ostringstream name;
                    name << pairing_out << "/pairing_" << std::setw(5) << std::setfill('0')
                         << index++ << ".txt";
                    std::ostringstream body;
                    rookham::save_pairing(body, p);
                    rookham::write_text_file(name.str(), body.str());
                    return true;
                });
                std::cerr << "wrote " << index << " pairings\n";
            } else {
                std::ostringstream body;
                rookham::save_pairing(body, rookham::random_pairing(g, seed));
                emit(pairing_out, body.str());
            }
            return kExitOk;
        }

        if (extend->parsed()) {
            rookham::Graph g = rookham::load_graph_file(ext_graph);
            rookham::Pairing m = rookham::load_pairing_file(ext_pairing, g);
            rookham::SearchOptions opts;
            opts.node_budget = budget_or_unlimited(budget);

            std::optional<rookham::HamCycle> cycle;
            if (method == "construct") {
                cycle = rookham::constructive_extend(g, m, opts);
            } else if (method != "search") {
                throw rookham::invalid_parameter("--method must be construct or search");
            }
            if (cycle) {
                std::ostringstream out;
                rookham::save_cycle(out, *cycle, g, m);
                emit(ext_out, out.str());
                return kExitOk;
            }
            // search decides (also the authority when the construct route failed)
            rookham::Certificate cert = rookham::decide_nonextendable(g, m, opts);
            if (cert.outcome == rookham::SearchOutcome::extendable) {
                if (method == "construct")
                    std::cerr << "warning: construct route failed but the search extends; "
                                 "this is a bug signal\n";
                std::ostringstream out;
                rookham::save_cycle(out, *cert.cycle, g, m);
                emit(ext_out, out.str());
                return kExitOk;
            }
            emit(ext_out, json_text(rookham::certificate_to_json(cert)));
            return cert.outcome == rookham::SearchOutcome::nonextendable ? kExitFailed
                                                                         : kExitInconclusive;
        }

        if (verify->parsed()) {
            rookham::Graph g = rookham::load_graph_file(ver_graph);
            rookham::Pairing m = rookham::load_pairing_file(ver_pairing, g);
            rookham::HamCycle h = rookham::load_cycle_file(ver_cycle);
            bool ok = rookham::verify_extension(g, m, h);
            std::cout << (ok ? "pass" : "fail") << "\n";
            return ok ? kExitOk : kExitFailed;
        }

        if (check->parsed()) {
            rookham::Graph g = rookham::load_graph_file(chk_graph);
            if (exhaustive == (sample_count > 0))
                throw rookham::invalid_parameter("pick exactly one of --exhaustive / --sample N");
            rookham::CheckOptions opts;
            opts.mode = exhaustive ? rookham::CheckMode::exhaustive : rookham::CheckMode::sampled;
            opts.sample_count = sample_count;
            opts.seed = chk_seed;
            opts.workers = workers;
            opts.max_exhaustive_order = exhaustive_bound;
            opts.search.node_budget = budget_or_unlimited(chk_budget);
            if (extender == "construct" || extender == "constructive")
                opts.extender = rookham::ExtenderChoice::constructive;
            else if (extender == "search") opts.extender = rookham::ExtenderChoice::search;
            else if (extender == "both") opts.extender = rookham::ExtenderChoice::both;
            else throw rookham::invalid_parameter("--extender must be construct, search or both");

            rookham::PhReport report = rookham::check_ph(g, opts);
            emit(chk_out, json_text(rookham::report_to_json(report)));
            return report.verdict == rookham::PhVerdict::inconclusive ? kExitInconclusive : kExitOk;
        }

        if (certify->parsed()) {
            rookham::SearchOptions opts;
            opts.node_budget = budget_or_unlimited(cut_budget);
            rookham::Certificate cert = rookham::decide_nonextendable(
                rookham::build_rook(2, cut_m2), rookham::cut_pairing(cut_m2), opts);
            emit(cut_out, json_text(rookham::certificate_to_json(cert)));
            switch (cert.outcome) {
                case rookham::SearchOutcome::nonextendable: return kExitOk;
                case rookham::SearchOutcome::inconclusive: return kExitInconclusive;
                case rookham::SearchOutcome::extendable: return kExitFailed; // cannot happen
            }
            return kExitOk;
        }

        if (explore->parsed()) {
            rookham::CheckOptions opts;
            opts.workers = bor_workers;
            opts.search.node_budget = budget_or_unlimited(bor_budget);
            auto reports = rookham::explore_bishop_on_rook(max_order, opts);
            nlohmann::json j = nlohmann::json::array();
            bool any_inconclusive = false;
            for (const auto& report : reports) {
                j.push_back(rookham::report_to_json(report));
                any_inconclusive |= report.verdict == rookham::PhVerdict::inconclusive;
            }
            emit(bor_out, json_text(j));
            return any_inconclusive ? kExitInconclusive : kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
