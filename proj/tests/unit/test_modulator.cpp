#include "doctest.h"
#include "mecs/modulator.hpp"
#include "mecs/oracle.hpp"
#include "support/brute.hpp"

using namespace mecs;

TEST_CASE("deg1 modulator examples") {
    CHECK(deg1_modulator_3approx(brute::make_graph(4, {{0, 1}, {2, 3}})).empty());
    std::vector<Vertex> p3 = deg1_modulator_3approx(brute::path(3));
    CHECK(p3.size() <= 3);
    CHECK(std::find(p3.begin(), p3.end(), 1) != p3.end());
    std::vector<Vertex> k4 = deg1_modulator_3approx(brute::complete(4));
    CHECK(is_deg1_modulator(brute::complete(4), k4));
    CHECK(k4.size() <= 3 * 2);
}

TEST_CASE("modulator is valid and within three times optimum") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Graph g = brute::random_graph(rng, 1 + static_cast<int>(rng() % 9), 20);
        std::vector<Vertex> x = deg1_modulator_3approx(g);
        CHECK(is_deg1_modulator(g, x));
        const int opt = brute::min_deg1_modulator_size(g);
        CHECK(static_cast<int>(x.size()) <= 3 * opt);
        std::vector<Vertex> y = minimalize_modulator(g, x);
        CHECK(is_deg1_modulator(g, y));
        CHECK(y.size() <= x.size());
        for (Vertex v : y) {
            std::vector<Vertex> smaller;
            for (Vertex w : y) {
                if (w != v) smaller.push_back(w);
            }
            CHECK_FALSE(is_deg1_modulator(g, smaller));
        }
    }
}

TEST_CASE("precheck examples") {
    Precheck a = parameter_precheck({brute::complete(4), 2, 1});
    CHECK(a.yes);
    CHECK(a.witness.colored_count() == 2);
    CHECK(verify_coloring(a.witness, brute::complete(4)));

    Graph p3 = brute::path(3);
    Precheck b = parameter_precheck({p3, 2, 2});
    CHECK(b.yes);
    CHECK(b.witness.colored_count() == 2);
    CHECK(verify_coloring(b.witness, p3));

    Precheck c = parameter_precheck({brute::complete(4), 6, 2});
    CHECK_FALSE(c.yes);
    CHECK(c.vc_bound_holds);
    CHECK(c.modulator_bound_holds);
}

TEST_CASE("precheck never claims yes wrongly and its bounds hold otherwise") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        Graph g = brute::random_graph(rng, 1 + static_cast<int>(rng() % 7), 12);
        for (int p = 1; p <= 3; ++p) {
            for (int l = 0; l <= g.edge_count(); ++l) {
                Precheck pc = parameter_precheck({g, l, p});
                if (pc.yes) {
                    CHECK(verify_coloring(pc.witness, g));
                    CHECK(pc.witness.colored_count() >= l);
                } else {
                    CHECK(pc.vc_bound_holds);
                    // With one color the second matching cannot be used.
                    CHECK(pc.modulator_bound_holds == (p >= 2 || pc.mm + pc.second_matching < l));
                }
            }
        }
    }
}
