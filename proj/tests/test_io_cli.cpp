#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rookham/checker.hpp"
#include "rookham/construct.hpp"
#include "rookham/errors.hpp"
#include "rookham/io.hpp"

using namespace rookham;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// runs the CLI binary, capturing stdout
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ROOKHAM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("rookham_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("graph files round-trip") {
    for (const Graph& g : {build_rook(4, 3), build_complete_bipartite(3, 3),
                           build_hypercube(3), build_complete(6), build_bishop_on_rook(3, 2)}) {
        std::stringstream ss;
        save_graph(ss, g);
        Graph back = load_graph(ss);
        CHECK(back.vertices() == g.vertices());
        CHECK(back.edges() == g.edges());
        CHECK(back.family().kind == g.family().kind);
    }
}

TEST_CASE("unnamed families serialize as custom graphs") {
    Graph prod = cartesian_product(build_complete(2), build_complete(3));
    std::stringstream ss;
    save_graph(ss, prod);
    CHECK(ss.str().starts_with("graph custom\n"));
    Graph back = load_graph(ss);
    CHECK(back.vertices() == prod.vertices());
    CHECK(back.edges() == prod.edges());
    CHECK(back.family().kind == FamilyKind::custom);
}

TEST_CASE("graph files reject contradictions") {
    std::stringstream ss("graph rook 2 2\nv 0.0\nv 0.1\nv 1.0\nv 1.1\ne 0.0 0.1\n");
    CHECK_THROWS_AS(load_graph(ss), parse_error);
    std::stringstream empty("");
    CHECK_THROWS_AS(load_graph(empty), parse_error);
    std::stringstream junk("graph rook 2 2\nq nonsense\n");
    CHECK_THROWS_AS(load_graph(junk), parse_error);
}

TEST_CASE("pairing files round-trip with comments") {
    Graph g = build_rook(2, 3);
    Pairing m = cut_pairing(3);
    std::stringstream ss;
    ss << "# a comment\n\n";
    save_pairing(ss, m);
    CHECK(load_pairing(ss, g) == m);

    std::stringstream incomplete("0.0 1.0\n");
    CHECK_THROWS_AS(load_pairing(incomplete, g), parse_error);
}

TEST_CASE("cycle files round-trip") {
    Graph g = build_rook(4, 3);
    Pairing m = random_pairing(g, 3);
    HamCycle h = extend_rook4_odd(3, m);
    std::stringstream ss;
    save_cycle(ss, h, g, m);
    HamCycle back = load_cycle(ss);
    CHECK(same_cycle(back, h));
    CHECK(verify_extension(g, m, back));
}

TEST_CASE("certificate json carries the schema fields") {
    Certificate cert = decide_nonextendable(build_rook(2, 3), cut_pairing(3));
    nlohmann::json j = certificate_to_json(cert);
    CHECK(j["outcome"] == "nonextendable");
    CHECK(j["instance"]["graph"] == "rook 2 3");
    CHECK(j["instance"]["order"] == 6);
    CHECK(j["instance"]["pairing"].size() == 3);
    CHECK(j.contains("nodes_visited"));
    CHECK(j.contains("budget"));
    CHECK_FALSE(j.contains("cycle"));
}

TEST_CASE("report json carries the schema fields") {
    CheckOptions opts;
    PhReport report = check_ph(build_rook(2, 3), opts);
    nlohmann::json j = report_to_json(report);
    CHECK(j["family"] == "rook");
    CHECK(j["parameters"] == nlohmann::json::array({2, 3}));
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["pairings_tested"] == 15);
    CHECK(j["verdict"] == "not-PH");
    CHECK(j.contains("witness"));
    CHECK(j.contains("wall_time"));
    CHECK(j["extended"].get<std::uint64_t>() + j["failures"].size() +
              j["inconclusive"].get<std::uint64_t>() ==
          15);
}

TEST_CASE("cli: gen graph round-trips") {
    TempDir tmp;
    auto graph_file = tmp.file("rook.graph");
    RunResult gen = run_cli("gen graph --family rook --m1 4 --m2 3 -o " + graph_file);
    CHECK(gen.exit_code == 0);
    Graph g = load_graph_file(graph_file);
    CHECK(g.family().kind == FamilyKind::rook);
    CHECK(g.order() == 12);
}

TEST_CASE("cli: gen pairing --all writes every pairing") {
    TempDir tmp;
    auto graph_file = tmp.file("r22.graph");
    run_cli("gen graph --family rook --m1 2 --m2 2 -o " + graph_file);
    auto dir = tmp.file("pairings");
    RunResult gen = run_cli("gen pairing --graph " + graph_file + " --all -o " + dir);
    CHECK(gen.exit_code == 0);
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        (void)entry;
        ++count;
    }
    CHECK(count == 3);
}

TEST_CASE("cli: gen pairing --random is reproducible") {
    TempDir tmp;
    auto graph_file = tmp.file("g.graph");
    run_cli("gen graph --family knn --m1 4 --m2 4 -o " + graph_file);
    auto p1 = tmp.file("p1.txt");
    auto p2 = tmp.file("p2.txt");
    CHECK(run_cli("gen pairing --graph " + graph_file + " --random --seed 7 -o " + p1).exit_code == 0);
    CHECK(run_cli("gen pairing --graph " + graph_file + " --random --seed 7 -o " + p2).exit_code == 0);
    CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("cli: extend then verify pipeline") {
    TempDir tmp;
    auto graph_file = tmp.file("rook43.graph");
    auto pairing_file = tmp.file("m.txt");
    auto cycle_file = tmp.file("h.txt");
    run_cli("gen graph --family rook --m1 4 --m2 3 -o " + graph_file);
    run_cli("gen pairing --graph " + graph_file + " --random --seed 11 -o " + pairing_file);

    RunResult ext = run_cli("extend --graph " + graph_file + " --pairing " + pairing_file +
                            " --method construct -o " + cycle_file);
    CHECK(ext.exit_code == 0);

    RunResult ok = run_cli("verify --graph " + graph_file + " --pairing " + pairing_file +
                           " --cycle " + cycle_file);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "pass\n");

    // tamper: swap the first two labels
    {
        std::string text = slurp(cycle_file);
        auto first_space = text.find(' ');
        auto second_space = text.find(' ', first_space + 1);
        std::string tampered = text.substr(first_space + 1, second_space - first_space - 1) +
                               " " + text.substr(0, first_space) + text.substr(second_space);
        write_text_file(cycle_file, tampered);
    }
    RunResult bad = run_cli("verify --graph " + graph_file + " --pairing " + pairing_file +
                            " --cycle " + cycle_file);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output == "fail\n");
}

TEST_CASE("cli: extend reports nonextendable with exit 1") {
    TempDir tmp;
    auto graph_file = tmp.file("r23.graph");
    auto pairing_file = tmp.file("cut.txt");
    auto out = tmp.file("cert.json");
    run_cli("gen graph --family rook --m1 2 --m2 3 -o " + graph_file);
    {
        std::ostringstream body;
        save_pairing(body, cut_pairing(3));
        write_text_file(pairing_file, body.str());
    }
    RunResult ext = run_cli("extend --graph " + graph_file + " --pairing " + pairing_file +
                            " --method search -o " + out);
    CHECK(ext.exit_code == 1);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["outcome"] == "nonextendable");
}

TEST_CASE("cli: identical runs write identical files") {
    TempDir tmp;
    auto graph_file = tmp.file("g.graph");
    auto pairing_file = tmp.file("m.txt");
    run_cli("gen graph --family rook --m1 4 --m2 5 -o " + graph_file);
    run_cli("gen pairing --graph " + graph_file + " --random --seed 77 -o " + pairing_file);
    auto c1 = tmp.file("h1.txt");
    auto c2 = tmp.file("h2.txt");
    std::string base = "extend --graph " + graph_file + " --pairing " + pairing_file;
    CHECK(run_cli(base + " --method construct -o " + c1).exit_code == 0);
    CHECK(run_cli(base + " --method construct -o " + c2).exit_code == 0);
    CHECK(slurp(c1) == slurp(c2));
    auto s1 = tmp.file("s1.txt");
    auto s2 = tmp.file("s2.txt");
    CHECK(run_cli(base + " --method search -o " + s1).exit_code == 0);
    CHECK(run_cli(base + " --method search -o " + s2).exit_code == 0);
    CHECK(slurp(s1) == slurp(s2));
}

TEST_CASE("cli: tiny budgets exit 3") {
    TempDir tmp;
    auto graph_file = tmp.file("r43.graph");
    auto pairing_file = tmp.file("m.txt");
    run_cli("gen graph --family rook --m1 4 --m2 3 -o " + graph_file);
    run_cli("gen pairing --graph " + graph_file + " --random --seed 2 -o " + pairing_file);
    RunResult ext = run_cli("extend --graph " + graph_file + " --pairing " + pairing_file +
                            " --method search --budget 1 -o " + tmp.file("cert.json"));
    CHECK(ext.exit_code == 3);
}

TEST_CASE("cli: certify-cut") {
    TempDir tmp;
    auto out = tmp.file("cert.json");
    RunResult res = run_cli("certify-cut --m2 3 -o " + out);
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["outcome"] == "nonextendable");
    CHECK(j["nodes_visited"].get<std::uint64_t>() > 0);

    CHECK(run_cli("certify-cut --m2 4 -o -").exit_code == 2);
}

TEST_CASE("cli: check-ph writes a report") {
    TempDir tmp;
    auto graph_file = tmp.file("r23.graph");
    auto out = tmp.file("report.json");
    run_cli("gen graph --family rook --m1 2 --m2 3 -o " + graph_file);
    RunResult res = run_cli("check-ph --graph " + graph_file + " --exhaustive -o " + out);
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["verdict"] == "not-PH");
    CHECK(j["pairings_tested"] == 15);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli("extend --graph /nonexistent --pairing /nonexistent").exit_code == 2);
    CHECK(run_cli("gen graph --family nosuch --m1 3").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("cli: help is available") {
    RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("check-ph") != std::string::npos);
    CHECK(help.output.find("certify-cut") != std::string::npos);
}
