#include "rookham/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "rookham/errors.hpp"

namespace rookham {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

bool skippable(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::optional<Graph> rebuild_named(const std::string& token, const std::vector<int>& params) {
    if (token == "complete" && params.size() == 1) return build_complete(params[0]);
    if (token == "path" && params.size() == 1) return build_path(params[0]);
    if (token == "hypercube" && params.size() == 1) return build_hypercube(params[0]);
    if (token == "knn" && params.size() == 2) return build_complete_bipartite(params[0], params[1]);
    if (token == "rook" && params.size() == 2) return build_rook(params[0], params[1]);
    if (token == "bor" && params.size() == 2) return build_bishop_on_rook(params[0], params[1]);
    return std::nullopt;
}

} // namespace

void save_graph(std::ostream& out, const Graph& g) {
    const Family& fam = g.family();
    switch (fam.kind) {
        case FamilyKind::complete:
        case FamilyKind::path:
        case FamilyKind::hypercube:
        case FamilyKind::complete_bipartite:
        case FamilyKind::rook:
        case FamilyKind::bishop_on_rook:
            out << "graph " << fam.to_line() << "\n";
            break;
        default:
            out << "graph custom\n";
            break;
    }
    for (const Vertex& v : g.vertices()) out << "v " << to_label(v) << "\n";
    for (const auto& e : g.edges()) out << "e " << to_label(e.first) << " " << to_label(e.second) << "\n";
}

Graph load_graph(std::istream& in) {
    std::string line;
    std::string family_token;
    std::vector<int> family_params;
    std::vector<Vertex> vertices;
    std::vector<VertexPair> edges;
    bool header_seen = false;

    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (!header_seen) {
            if (toks.size() < 2 || toks[0] != "graph")
                throw parse_error("graph file must start with a 'graph <family>' line");
            family_token = toks[1];
            for (std::size_t i = 2; i < toks.size(); ++i) {
                try {
                    family_params.push_back(std::stoi(toks[i]));
                } catch (...) {
                    throw parse_error("bad family parameter '" + toks[i] + "'");
                }
            }
            header_seen = true;
            continue;
        }
        if (toks[0] == "v" && toks.size() == 2) {
            vertices.push_back(vertex_from_label(toks[1]));
        } else if (toks[0] == "e" && toks.size() == 3) {
            edges.push_back({vertex_from_label(toks[1]), vertex_from_label(toks[2])});
        } else {
            throw parse_error("unrecognized graph file line: '" + line + "'");
        }
    }
    if (!header_seen) throw parse_error("empty graph file");

    auto named = rebuild_named(family_token, family_params);
    if (named) {
        // a named family must agree with the listed structure
        Graph listed = Graph::custom(vertices, edges, named->family());
        if (listed.vertices() != named->vertices() || listed.edges() != named->edges())
            throw parse_error("graph file contradicts its declared family");
        return *named;
    }
    if (family_token != "custom" && family_token != "cartesian" &&
        family_token != "conormal" && family_token != "linegraph")
        throw parse_error("unknown graph family '" + family_token + "'");
    return Graph::custom(std::move(vertices), std::move(edges), {});
}

void save_pairing(std::ostream& out, const Pairing& m) {
    for (const auto& pr : m.pairs())
        out << to_label(pr.first) << " " << to_label(pr.second) << "\n";
}

Pairing load_pairing(std::istream& in, const Graph& ground) {
    std::string line;
    std::vector<VertexPair> pairs;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw parse_error("pairing line needs two labels: '" + line + "'");
        pairs.push_back({vertex_from_label(toks[0]), vertex_from_label(toks[1])});
    }
    Pairing m = Pairing::of_pairs(std::move(pairs));
    if (!m.covers_exactly(ground))
        throw parse_error("pairing does not cover the graph's vertex set exactly");
    return m;
}

void save_cycle(std::ostream& out, const HamCycle& h) {
    auto canon = h.canonical();
    for (std::size_t i = 0; i < canon.size(); ++i)
        out << (i ? " " : "") << to_label(canon[i]);
    out << "\n";
}

void save_cycle(std::ostream& out, const HamCycle& h, const Graph& host, const Pairing& m) {
    save_cycle(out, h);
    std::size_t pairing_edges = 0;
    for (const auto& e : h.edge_list())
        if (m.contains(e)) ++pairing_edges;
    (void)host;
    out << "# pairing-edges: " << pairing_edges
        << ", graph-edges: " << (h.order.size() - pairing_edges) << "\n";
}

HamCycle load_cycle(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        HamCycle h;
        for (const std::string& tok : tokens_of(line)) h.order.push_back(vertex_from_label(tok));
        if (h.order.size() < 3) throw parse_error("cycle needs at least three vertices");
        return h;
    }
    throw parse_error("empty cycle file");
}

namespace {

nlohmann::json pairing_to_json(const Pairing& m) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& pr : m.pairs())
        pairs.push_back({to_label(pr.first), to_label(pr.second)});
    return pairs;
}

nlohmann::json cycle_to_json(const HamCycle& h) {
    nlohmann::json labels = nlohmann::json::array();
    for (const Vertex& v : h.canonical()) labels.push_back(to_label(v));
    return labels;
}

} // namespace

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["instance"] = {{"graph", cert.graph_desc},
                     {"order", cert.order},
                     {"pairing", pairing_to_json(cert.pairing)}};
    j["outcome"] = to_string(cert.outcome);
    if (cert.cycle) j["cycle"] = cycle_to_json(*cert.cycle);
    j["nodes_visited"] = cert.stats.nodes_visited;
    j["prunes"] = cert.stats.prunes;
    j["budget"] = cert.budget;
    return j;
}

nlohmann::json report_to_json(const PhReport& report) {
    nlohmann::json j;
    j["family"] = report.family;
    j["parameters"] = report.parameters;
    j["order"] = report.order;
    if (report.mode == CheckMode::exhaustive) {
        j["mode"] = "exhaustive";
    } else {
        j["mode"] = {{"sampled", {{"count", report.sample_count}, {"seed", report.seed}}}};
    }
    j["extender"] = to_string(report.extender);
    j["pairings_tested"] = report.pairings_tested;
    j["extended"] = report.extended;
    j["inconclusive"] = report.inconclusive;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& m : report.failures) failures.push_back(pairing_to_json(m));
    j["failures"] = failures;
    nlohmann::json disagreements = nlohmann::json::array();
    for (const auto& m : report.disagreements) disagreements.push_back(pairing_to_json(m));
    j["disagreements"] = disagreements;
    j["escalations"] = report.escalations;
    j["verdict"] = to_string(report.verdict);
    if (report.witness) j["witness"] = pairing_to_json(*report.witness);
    j["wall_time"] = report.wall_time;
    return j;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file '" + path + "'");
    return load_graph(in);
}

Pairing load_pairing_file(const std::string& path, const Graph& ground) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open pairing file '" + path + "'");
    return load_pairing(in, ground);
}

HamCycle load_cycle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open cycle file '" + path + "'");
    return load_cycle(in);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file '" + path + "'");
    out << content;
}

} // namespace rookham
