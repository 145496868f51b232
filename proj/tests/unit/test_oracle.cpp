#include "doctest.h"
#include "mecs/errors.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/oracle.hpp"
#include "support/brute.hpp"

using namespace mecs;

namespace {

Graph petersen() {
    return brute::make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                  {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

}  // namespace

TEST_CASE("oracle examples") {
    MecsSolution k3 = solve_exact({brute::complete(3), 2, 2});
    CHECK(k3.yes());
    CHECK(k3.optimum == 2);
    MecsSolution k4 = solve_exact({brute::complete(4), 4, 2});
    CHECK(k4.yes());
    CHECK(k4.optimum == 4);
    CHECK(verify_coloring(k4.witness, brute::complete(4)));
    MecsSolution empty = solve_exact({brute::complete(4), 0, 1});
    CHECK(empty.yes());
    CHECK_FALSE(solve_exact({brute::complete(3), 3, 2}).yes());
}

TEST_CASE("oracle frozen optima") {
    // Values produced by the exhaustive subset oracle in tests/support.
    CHECK(solve_exact({brute::complete(5), 0, 1}).optimum == 2);
    CHECK(solve_exact({brute::complete(5), 0, 2}).optimum == 4);
    CHECK(solve_exact({brute::complete(5), 0, 3}).optimum == 6);
    CHECK(solve_exact({brute::complete(5), 0, 4}).optimum == 8);
    CHECK(solve_exact({petersen(), 0, 2}).optimum == 9);
    CHECK(solve_exact({petersen(), 0, 3}).optimum == 13);
    CHECK(solve_exact({brute::cycle(7), 0, 2}).optimum == 6);
    CHECK(solve_exact({brute::star(5), 0, 2}).optimum == 2);
}

TEST_CASE("chromatic index") {
    CHECK(chromatic_index_exact(brute::cycle(6)) == 2);
    CHECK(chromatic_index_exact(brute::cycle(5)) == 3);
    CHECK(chromatic_index_exact(petersen()) == 4);
    CHECK(chromatic_index_exact(brute::complete(5)) == 5);
}

TEST_CASE("closing two modules into a cubic graph gives chromatic index 3 or 4") {
    GraphBuilder b;
    ModuleVertices m0 = b.add_module();
    ModuleVertices m1 = b.add_module();
    for (int i = 0; i < 5; ++i) b.add_edge(m0.port[i], m1.port[i]);
    Graph g = b.build();
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
    int chi = chromatic_index_exact(g);
    CHECK(chi >= 3);
    CHECK(chi <= 4);
}

TEST_CASE("oracle agrees with brute force") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 150; ++i) {
        Graph g = brute::random_graph(rng, 1 + static_cast<int>(rng() % 7), 12);
        for (int p = 1; p <= 3; ++p) {
            MecsSolution s = solve_exact({g, 0, p});
            CHECK(s.optimum == brute::mecs_optimum(g, p));
            CHECK(verify_coloring(s.witness, g));
            CHECK(s.witness.colored_count() == *s.optimum);
        }
    }
}

TEST_CASE("oracle edge cap") {
    CHECK_THROWS_AS(solve_exact({brute::complete(8), 1, 2}), InstanceTooLarge);
    CHECK_NOTHROW(solve_exact({brute::complete(8), 1, 2}, {28, {}}));
}

TEST_CASE("enumerate_edge_colorings counts") {
    // K3 with 3 colors: 3! proper colorings; P3 with 2 colors: 2.
    CHECK(enumerate_edge_colorings(brute::complete(3), 3, {0, 0, 0}, [](const auto&) { return true; }) == 6);
    CHECK(enumerate_edge_colorings(brute::path(3), 2, {0, 0}, [](const auto&) { return true; }) == 2);
    CHECK(enumerate_edge_colorings(brute::path(3), 2, {1, 0}, [](const auto&) { return true; }) == 1);
    CHECK(enumerate_edge_colorings(brute::complete(3), 2, {0, 0, 0}, [](const auto&) { return true; }) == 0);
}
