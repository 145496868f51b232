#include <sstream>

#include "doctest.h"
#include "mecs/errors.hpp"
#include "mecs/ilp.hpp"
#include "mecs/oracle.hpp"
#include "support/brute.hpp"

using namespace mecs;

namespace {

int value_of(const IlpModel& model, const IlpSolution& sol, int type, int alpha) {
    return sol.values[model.variable_index(type, alpha)];
}

}  // namespace

TEST_CASE("types of a path and a star") {
    TypeContext p3 = make_type_context(brute::path(3), {1});
    CHECK(p3.rest == std::vector<Vertex>{0, 2});
    std::vector<TypeTuple> t = enumerate_types(p3);
    REQUIRE(t.size() == 2);
    CHECK(t[0].size() == 0);
    CHECK(t[1].x_prime == std::vector<int>{0});
    CHECK(t[1].slots == std::vector<VertexMask>{1});
    CHECK(p3.false_twins(0) == 2);
    CHECK(p3.is_present(0, t[1]) == 1);
    CHECK(p3.is_present(0, t[0]) == 0);
    CHECK(p3.nr_nbr_present(0, t[1]) == 1);

    TypeContext star = make_type_context(brute::star(3), {0});
    CHECK(enumerate_types(star).size() == 2);

    TypeContext empty = make_type_context(Graph(3), {});
    std::vector<TypeTuple> only = enumerate_types(empty);
    REQUIRE(only.size() == 1);
    CHECK(only[0].size() == 0);
}

TEST_CASE("types respect class multiplicities") {
    // Cover {0,1}; W = {2} adjacent to both. A single vertex cannot partner both cover vertices.
    Graph g = brute::make_graph(3, {{0, 2}, {1, 2}});
    TypeContext ctx = make_type_context(g, {0, 1});
    std::vector<TypeTuple> t = enumerate_types(ctx);
    CHECK(t.size() == 3);
    for (const auto& tt : t) CHECK(tt.size() <= 1);
}

TEST_CASE("guesses are proper and canonical") {
    Graph tri = brute::complete(3);
    TypeContext ctx = make_type_context(tri, {0, 1});
    std::vector<PartialGuess> gs = enumerate_guesses(tri, ctx, 2);
    // Edge (0,1) absent, or present with the single canonical color 1.
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].h_prime.empty());
    CHECK(gs[0].p0 == 0);
    CHECK(gs[1].colors == std::vector<int>{1});
    CHECK(gs[1].p0 == 1);

    Graph k3 = brute::complete(3);
    TypeContext full = make_type_context(k3, {0, 1, 2});
    // Subsets of K3 edges with restricted-growth proper colorings, p = 3:
    // empty 1, singles 3, pairs 3 (two colors), triangle 1.
    CHECK(enumerate_guesses(k3, full, 3).size() == 8);
    // p = 2 rules out the triangle.
    CHECK(enumerate_guesses(k3, full, 2).size() == 7);
}

TEST_CASE("path model solves to two") {
    Graph p3 = brute::path(3);
    TypeContext ctx = make_type_context(p3, {1});
    std::vector<TypeTuple> types = enumerate_types(ctx);
    std::vector<PartialGuess> gs = enumerate_guesses(p3, ctx, 2);
    REQUIRE(gs.size() == 1);
    IlpModel model = build_ilp(p3, ctx, types, gs[0], 2);
    CHECK(model.variables.size() == 2);
    CHECK(model.variable_name(1) == "Y_t1_a0");
    IlpSolution sol = solve_ilp(model);
    CHECK(sol.objective == 2);
    CHECK(value_of(model, sol, 1, 0) == 2);

    EdgeColoring c = reconstruct(p3, ctx, types, gs[0], model, sol.values, 2);
    CHECK(verify_coloring(c, p3));
    CHECK(c.colored_count() == 2);
    CHECK(c.color(0) != c.color(1));
}

TEST_CASE("reserved colors are forbidden at cover vertices of the guess") {
    Graph g = brute::make_graph(3, {{0, 1}, {0, 2}});
    TypeContext ctx = make_type_context(g, {0, 1});
    std::vector<TypeTuple> types = enumerate_types(ctx);
    std::vector<PartialGuess> gs = enumerate_guesses(g, ctx, 2);
    const PartialGuess& with_edge = gs.back();
    REQUIRE(with_edge.h_prime.size() == 1);
    IlpModel model = build_ilp(g, ctx, types, with_edge, 2);
    int forbidden = 0;
    for (const auto& c : model.constraints) {
        if (c.family != "II") continue;
        ++forbidden;
        REQUIRE(c.terms.size() == 1);
        CHECK(model.variables[c.terms[0].first].second == 1);
        CHECK(c.rhs == 0);
    }
    CHECK(forbidden > 0);
}

TEST_CASE("solve_ilp small models") {
    IlpModel zero;
    zero.variables = {{0, 0}, {1, 0}};
    zero.objective = {1, 2};
    zero.upper = {5, 5};
    zero.constraints = {{"I", {{0, 1}}, 0}, {"I", {{1, 1}}, 0}};
    IlpSolution z = solve_ilp(zero);
    CHECK(z.objective == 0);
    CHECK(z.values == std::vector<int>{0, 0});

    IlpModel single;
    single.variables = {{0, 1}};
    single.objective = {3};
    single.upper = {4};
    single.constraints = {{"IV", {{0, 1}}, 1}};
    CHECK(solve_ilp(single).objective == 3);
}

TEST_CASE("solve_ilp needs branching on fractional relaxations") {
    // max x + y  s.t.  2x + 2y <= 3  -> LP 1.5, integer 1.
    IlpModel m;
    m.variables = {{0, 0}, {1, 0}};
    m.objective = {1, 1};
    m.upper = {3, 3};
    m.constraints = {{"I", {{0, 2}, {1, 2}}, 3}};
    IlpSolution s = solve_ilp(m);
    CHECK(s.objective == 1);
    CHECK(satisfies(m, s.values));
}

TEST_CASE("solve_ilp matches enumeration on random small models") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 200; ++i) {
        IlpModel m;
        const int nv = 1 + static_cast<int>(rng() % 4);
        for (int v = 0; v < nv; ++v) {
            m.variables.emplace_back(v, 0);
            m.objective.push_back(static_cast<int>(rng() % 4));
            m.upper.push_back(1 + static_cast<int>(rng() % 3));
        }
        const int nc = static_cast<int>(rng() % 4);
        for (int c = 0; c < nc; ++c) {
            LinearConstraint lc{"I", {}, static_cast<int>(rng() % 6)};
            for (int v = 0; v < nv; ++v) {
                if (rng() % 2) lc.terms.emplace_back(v, 1 + static_cast<int>(rng() % 3));
            }
            m.constraints.push_back(lc);
        }
        long long best = -1;
        std::vector<int> x(nv, 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == nv) {
                if (!satisfies(m, x)) return;
                long long obj = 0;
                for (int j = 0; j < nv; ++j) obj += static_cast<long long>(m.objective[j]) * x[j];
                best = std::max(best, obj);
                return;
            }
            for (x[v] = 0; x[v] <= m.upper[v]; ++x[v]) self(self, v + 1);
            x[v] = 0;
        };
        rec(rec, 0);
        IlpSolution s = solve_ilp(m);
        CHECK(s.objective == best);
        CHECK(satisfies(m, s.values));
    }
}

TEST_CASE("reconstruction on a star picks the lowest leaves") {
    Graph star = brute::star(3);
    TypeContext ctx = make_type_context(star, {0});
    std::vector<TypeTuple> types = enumerate_types(ctx);
    PartialGuess none;
    IlpModel model = build_ilp(star, ctx, types, none, 2);
    std::vector<int> values(model.variables.size(), 0);
    values[model.variable_index(1, 0)] = 2;
    REQUIRE(satisfies(model, values));
    EdgeColoring c = reconstruct(star, ctx, types, none, model, values, 2);
    CHECK(c.colors() == std::vector<int>{1, 2, 0});
    EdgeColoring empty = reconstruct(star, ctx, types, none, model, std::vector<int>(model.variables.size(), 0), 2);
    CHECK(empty.colored_count() == 0);
}

TEST_CASE("one cover vertex cannot reuse its only edge into a class") {
    Graph g = brute::make_graph(3, {{0, 1}});
    TypeContext ctx = make_type_context(g, {0});
    std::vector<TypeTuple> types = enumerate_types(ctx);
    IlpModel model = build_ilp(g, ctx, types, {}, 2);
    IlpSolution s = solve_ilp(model);
    CHECK(s.objective == 1);
}

TEST_CASE("solve via ilp examples") {
    CHECK(solve_via_ilp({brute::path(3), 2, 2}).yes());
    MecsSolution k3 = solve_via_ilp({brute::complete(3), 3, 2});
    CHECK_FALSE(k3.yes());
    CHECK(k3.optimum == 2);
    Graph k4 = brute::complete(4);
    MecsSolution s = solve_via_ilp({k4, 4, 2});
    CHECK(s.yes());
    CHECK(verify_coloring(s.witness, k4));
    CHECK(s.witness.colored_count() >= 4);
    CHECK_THROWS_AS(solve_via_ilp({brute::complete(7), 1, 2}), BudgetExceeded);
}

TEST_CASE("ilp agrees with the oracle on graphs with small vertex cover") {
    std::mt19937_64 rng(71);
    int checked = 0;
    while (checked < 150) {
        Graph g = brute::random_graph(rng, 1 + static_cast<int>(rng() % 7), 12);
        if (brute::min_vertex_cover_size(g) > 3) continue;
        ++checked;
        for (int p = 1; p <= 3; ++p) {
            const int opt = brute::mecs_optimum(g, p);
            for (int l = 0; l <= g.edge_count(); ++l) {
                MecsSolution s = solve_via_ilp({g, l, p});
                CHECK(s.yes() == (l <= opt));
                if (s.yes()) {
                    CHECK(verify_coloring(s.witness, g));
                    CHECK(s.witness.colored_count() >= l);
                } else {
                    CHECK(s.optimum == opt);
                }
            }
        }
    }
}

TEST_CASE("lp dump lists each guess") {
    std::ostringstream os;
    IlpOptions opts;
    opts.dump = &os;
    solve_via_ilp({brute::complete(3), 3, 2}, opts);
    std::string text = os.str();
    CHECK(text.find("# guess 0 h_prime p0 0\nmaximize ") == 0);
    CHECK(text.find("# guess 1") != std::string::npos);
    CHECK(text.find(" <= ") != std::string::npos);
}
