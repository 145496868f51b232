#include "mecs_cli/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mecs::cli {

namespace {

int below(CounterRng& rng, int bound) { return static_cast<int>(rng.next() % static_cast<std::uint64_t>(bound)); }

}  // namespace

Graph random_graph(int n, int m, CounterRng& rng) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative graph size");
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    const int take = std::min<int>(m, static_cast<int>(all.size()));
    // Partial Fisher-Yates.
    for (int i = 0; i < take; ++i) std::swap(all[i], all[i + below(rng, static_cast<int>(all.size()) - i)]);
    all.resize(take);
    std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return Graph(n, std::move(all));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

RbdsInstance random_rbds(int red, int blue, int max_degree, int k, CounterRng& rng) {
    if (red < 1 || blue < 1 || max_degree < 1) throw std::invalid_argument("bad RBDS generator sizes");
    RbdsInstance inst;
    inst.red = red;
    inst.blue = blue;
    inst.k = k;
    std::vector<int> reds(red);
    for (int b = 0; b < blue; ++b) {
        std::iota(reds.begin(), reds.end(), 0);
        int d = 1 + below(rng, std::min(max_degree, red));
        for (int i = 0; i < d; ++i) std::swap(reds[i], reds[i + below(rng, red - i)]);
        std::sort(reds.begin(), reds.begin() + d);
        for (int i = 0; i < d; ++i) inst.edges.emplace_back(reds[i], b);
    }
    std::vector<bool> touched(red, false);
    for (auto [r, b] : inst.edges) touched[r] = true;
    for (int r = 0; r < red; ++r) {
        if (!touched[r]) inst.edges.emplace_back(r, below(rng, blue));
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    return inst;
}

}  // namespace mecs::cli
