#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rookham/checker.hpp"
#include "rookham/cycle.hpp"
#include "rookham/graph.hpp"
#include "rookham/pairing.hpp"
#include "rookham/search.hpp"

namespace rookham {

// Graph file: `graph <family> <params>`, then `v <row>.<col>` lines, then
// `e <row>.<col> <row>.<col>` lines. Named families are rebuilt from their
// parameters and must match the listed vertices/edges exactly.
void save_graph(std::ostream& out, const Graph& g);
Graph load_graph(std::istream& in);

// Pairing file: one `<row>.<col> <row>.<col>` pair per line; `#` comments
// and blank lines ignored. Written in canonical order.
void save_pairing(std::ostream& out, const Pairing& m);
Pairing load_pairing(std::istream& in, const Graph& ground); // must cover ground

// Cycle file: one line of space-separated labels, closed implicitly, in
// canonical rotation; when the host and pairing are at hand a comment line
// records the edge split.
void save_cycle(std::ostream& out, const HamCycle& h);
void save_cycle(std::ostream& out, const HamCycle& h, const Graph& host, const Pairing& m);
HamCycle load_cycle(std::istream& in);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json report_to_json(const PhReport& report);

// File-path helpers; throw parse_error when the file cannot be opened.
Graph load_graph_file(const std::string& path);
Pairing load_pairing_file(const std::string& path, const Graph& ground);
HamCycle load_cycle_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace rookham
