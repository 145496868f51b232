#include <chrono>

#include "doctest.h"
#include "mecs/gadgets.hpp"
#include "mecs/oracle.hpp"
#include "support/brute.hpp"

using namespace mecs;

TEST_CASE("module shape") {
    Fragment m = build_module();
    // Seven module vertices plus five private hanging endpoints.
    CHECK(m.graph.vertex_count() == 12);
    CHECK(m.graph.edge_count() == 13);
    int half = 0;
    for (Vertex v = 0; v < 7; ++v) {
        CHECK(m.graph.degree(v) == 3);
        half += m.graph.degree(v);
    }
    CHECK(half == 21);
    CHECK(module_wiring().size() == 8);
}

TEST_CASE("gadget module counts") {
    GraphBuilder b;
    CHECK(add_red_gadget(b, 4).modules.size() == 10);
    CHECK(add_red_gadget(b, 4).outputs.size() == 5);
    Vertex blue = b.add_vertex();
    BlueGadget bg = add_blue_gadget(b, 3, blue);
    CHECK(bg.modules.size() == 3);
    CHECK(bg.cycle.size() == 7);
    CHECK(bg.inputs.size() == 3);
}

TEST_CASE("single edge reduction") {
    RbdsInstance inst{1, 1, {{0, 0}}, 1};
    GadgetLayout layout = reduce_rbds(inst);
    REQUIRE(layout.red.size() == 1);
    REQUIRE(layout.blue.size() == 1);
    CHECK(layout.red[0].gadget.modules.size() == 4);
    CHECK(layout.blue[0].gadget.modules.size() == 1);
    CHECK(layout.blue[0].gadget.cycle.size() == 3);
    const Graph& g = layout.mecs.graph;
    CHECK(g.edge_count() == 59);
    CHECK(layout.mecs.p == 3);
    CHECK(layout.mecs.l == g.edge_count() - 1);
    for (Vertex v : layout.internal) CHECK(g.degree(v) == 3);
    CHECK(g.max_degree() <= 3);
}

TEST_CASE("reductions on the smallest instances decide like the source") {
    for (int k = 0; k <= 1; ++k) {
        RbdsInstance inst{1, 1, {{0, 0}}, k};
        GadgetLayout layout = reduce_rbds(inst);
        MecsSolution s = solve_exact(layout.mecs, {64, {}});
        CHECK(s.yes() == rbds_brute_force(inst));
        CHECK(s.optimum == layout.mecs.graph.edge_count() - 1);
    }
}

TEST_CASE("edge count bound and degree shape on random instances") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 200; ++i) {
        RbdsInstance inst;
        inst.red = 1 + static_cast<int>(rng() % 5);
        inst.blue = 1 + static_cast<int>(rng() % 5);
        for (int r = 0; r < inst.red; ++r) {
            for (int b = 0; b < inst.blue; ++b) {
                if (rng() % 2) inst.edges.emplace_back(r, b);
            }
        }
        // Make every vertex non-isolated.
        std::vector<bool> rs(inst.red), bs(inst.blue);
        for (auto [r, b] : inst.edges) rs[r] = bs[b] = true;
        for (int r = 0; r < inst.red; ++r) {
            if (!rs[r]) inst.edges.emplace_back(r, static_cast<int>(rng() % inst.blue)), bs[inst.edges.back().second] = true;
        }
        for (int b = 0; b < inst.blue; ++b) {
            if (!bs[b]) inst.edges.emplace_back(static_cast<int>(rng() % inst.red), b);
        }
        std::sort(inst.edges.begin(), inst.edges.end());
        inst.edges.erase(std::unique(inst.edges.begin(), inst.edges.end()), inst.edges.end());
        inst.k = static_cast<int>(rng() % (inst.red + 1));

        GadgetLayout layout = reduce_rbds(inst);
        const Graph& g = layout.mecs.graph;
        const int e = static_cast<int>(inst.edges.size());
        CHECK(g.edge_count() == 35 * e + 22 * inst.red + 2 * inst.blue);
        CHECK(g.edge_count() <= 67 * e);
        CHECK(g.max_degree() <= 3);
        for (Vertex v : layout.internal) CHECK(g.degree(v) == 3);
        for (int r = 0; r < inst.red; ++r) CHECK(g.degree(r) == 2);
        CHECK(layout.links.size() == inst.edges.size());
        CHECK(layout.mecs.l == std::max(0, g.edge_count() - inst.k));
    }
}

TEST_CASE("full red side always dominates") {
    RbdsInstance inst{3, 2, {{0, 0}, {1, 1}, {2, 0}}, 3};
    CHECK(rbds_brute_force(inst));
    inst.k = 1;
    CHECK_FALSE(rbds_brute_force(inst));
}

TEST_CASE("modify_at splits red vertices") {
    RbdsInstance inst{2, 1, {{0, 0}, {1, 0}}, 1};
    GadgetLayout layout = reduce_rbds(inst);
    Graph split = modify_at(layout, {1});
    CHECK(split.vertex_count() == layout.mecs.graph.vertex_count() + 1);
    CHECK(split.edge_count() == layout.mecs.graph.edge_count());
    CHECK(split.degree(1) == 1);
    CHECK(split.degree(split.vertex_count() - 1) == 1);
}

TEST_CASE("gadget claims hold by exhaustive enumeration") {
    std::vector<ClaimResult> claims = verify_claims();
    REQUIRE(claims.size() == 6);
    for (const ClaimResult& c : claims) {
        INFO(c.name);
        CHECK(c.pass);
        CHECK(c.colorings > 0);
    }
}
