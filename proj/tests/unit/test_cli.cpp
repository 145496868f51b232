#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mecs/io.hpp"
#include "mecs_cli/cli.hpp"
#include "mecs_cli/generators.hpp"
#include "mecs_cli/run_config.hpp"
#include "support/brute.hpp"

using namespace mecs;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("mecs_cli_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

int count_coloring_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("solve exit codes") {
    TempDir dir;
    std::string k4 = dir.write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    std::string k3 = dir.write("k3.txt", "3 3\n0 1\n0 2\n1 2\n");
    std::string bad = dir.write("bad.txt", "3 1\n1 1\n");

    Run yes = run({"solve", "--engine", "oracle", "--l", "4", "--p", "2", k4});
    CHECK(yes.code == 0);
    CHECK(yes.out.rfind("YES\n", 0) == 0);
    CHECK(count_coloring_lines(yes.out) == 4);

    for (const char* engine : {"oracle", "ilp", "rainbow", "divide-color"}) {
        Run no = run({"solve", "--engine", engine, "--l", "3", "--p", "2", k3});
        CHECK(no.code == 1);
        CHECK(no.out.rfind("NO\n", 0) == 0);
    }

    Run parse = run({"solve", "--l", "1", "--p", "1", bad});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 2") != std::string::npos);

    CHECK(run({"solve", "--engine", "magic", "--l", "1", "--p", "1", k4}).code == 2);
    CHECK(run({"solve", "--edge-cap", "0", "--l", "1", "--p", "1", k4}).code == 2);
    Run budget = run({"solve", "--edge-cap", "3", "--l", "1", "--p", "1", k4});
    CHECK(budget.code == 2);
    CHECK(budget.out.rfind("BUDGET\n", 0) == 0);
}

TEST_CASE("solve writes a verifiable coloring") {
    TempDir dir;
    std::string k4 = dir.write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    std::string col = (dir.path / "c.txt").string();
    CHECK(run({"solve", "--engine", "ilp", "--l", "4", "--p", "2", "--out", col, k4}).code == 0);
    Run ok = run({"verify", "--p", "2", "--l", "4", k4, col});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("VALID", 0) == 0);
    Run short_l = run({"verify", "--p", "2", "--l", "5", k4, col});
    CHECK(short_l.code == 1);
    std::string clash = dir.write("clash.txt", "0 1 1\n0 2 1\n");
    CHECK(run({"verify", "--p", "2", k4, clash}).code == 1);
}

TEST_CASE("kernelize and reduce-rainbow output") {
    TempDir dir;
    std::string star = dir.write("star.txt", "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n");
    std::string trace = (dir.path / "t.json").string();
    Run k = run({"kernelize", "--in", star, "--l", "5", "--p", "2", "--trace", trace});
    CHECK(k.code == 0);
    CHECK(k.out == "# l=3 p=2\n0 0\n");
    std::ifstream t(trace);
    std::string json((std::istreambuf_iterator<char>(t)), {});
    CHECK(json.find("\"rule\": \"RR2\"") != std::string::npos);
    CHECK(json.find("\"l_decrease\": 2") != std::string::npos);

    std::string k3 = dir.write("k3.txt", "3 3\n0 1\n0 2\n1 2\n");
    Run r = run({"reduce-rainbow", "--in", k3, "--l", "2", "--p", "2"});
    CHECK(r.code == 0);
    std::istringstream body(r.out);
    std::string header;
    std::getline(body, header);
    CHECK(header == "# k=2");
    LabeledGraph lg = read_labeled_graph(body);
    CHECK(lg.graph.vertex_count() == 6);
    CHECK(lg.labels == std::vector<int>{1, 2, 3, 1, 2, 3});
}

TEST_CASE("gen-gadget from a file") {
    TempDir dir;
    std::string rbds = dir.write("r.txt", "1 1 1 1\n0 0\n");
    std::string layout = (dir.path / "layout.json").string();
    Run g = run({"gen-gadget", "--rbds", rbds, "--layout", layout});
    CHECK(g.code == 0);
    std::istringstream body(g.out);
    std::string header;
    std::getline(body, header);
    CHECK(header == "# l=58 p=3");
    CHECK(read_graph(body).edge_count() == 59);
    CHECK(fs::file_size(layout) > 0);
}

TEST_CASE("cross-validate") {
    TempDir dir;
    Run empty = run({"cross-validate", dir.path.string()});
    CHECK(empty.code == 0);
    CHECK(empty.out == "triples 0 disagreements 0 one-sided-misses 0 budget 0\n");

    dir.write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    dir.write("manifest.txt", "# file l p\nk4.txt 4 2\nk4.txt 5 2\n");
    Run r = run({"cross-validate", dir.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("k4.txt l=4 p=2 oracle=YES ilp=YES rainbow=YES divide-color=YES kernel=YES\n") == 0);
    CHECK(r.out.find("triples 2 disagreements 0") != std::string::npos);

    dir.write("manifest.txt", "k4.txt 4\n");
    CHECK(run({"cross-validate", dir.path.string()}).code == 2);
}

TEST_CASE("bench csv") {
    Run a = run({"bench", "--count", "2", "--n", "5", "--m", "6", "--l-max", "3", "--seed", "4"});
    Run b = run({"bench", "--count", "2", "--n", "5", "--m", "6", "--l-max", "3", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("instance,engine,n,m,l,p,verdict,optimum,witness_size,seed,wall_ms\n", 0) == 0);
    // 2 instances x 3 values of l x 4 engines.
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1 + 24);

    Run k = run({"bench", "--family", "star", "--count", "6", "--p", "2", "--kernel"});
    std::istringstream rows(k.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "instance,n,m,l,p,modulator,p_times_x,kernel_n,kernel_m,kernel_l,early");
    int count = 0;
    while (std::getline(rows, line)) {
        ++count;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        REQUIRE(cols.size() == 11);
        CHECK(std::stoi(cols[7]) <= 3 * (2 + 1));
    }
    CHECK(count == 21);
}

TEST_CASE("generators") {
    CounterRng a(3), b(3);
    CHECK(cli::random_graph(7, 9, a) == cli::random_graph(7, 9, b));
    CounterRng c(3);
    CHECK(cli::random_graph(4, 100, c).edge_count() == 6);
    CHECK(cli::star_graph(4).edge_count() == 4);
    CHECK(cli::cycle_graph(5).edge_count() == 5);
    CounterRng d(8);
    RbdsInstance r = cli::random_rbds(4, 3, 2, 1, d);
    CHECK_NOTHROW(validate_rbds(r));
}

TEST_CASE("engine names round trip") {
    for (auto e : {cli::Engine::Oracle, cli::Engine::Ilp, cli::Engine::Rainbow, cli::Engine::DivideColor}) {
        CHECK(cli::parse_engine(cli::to_string(e)) == e);
    }
    CHECK_FALSE(cli::parse_engine("lenstra").has_value());
}
