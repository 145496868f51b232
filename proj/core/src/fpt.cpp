#include "mecs/fpt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mecs/matching.hpp"

namespace mecs {

MecsInstance pad_to_multiple(const MecsInstance& inst) {
    validate_instance(inst);
    int r = inst.l % inst.p;
    if (r == 0) return inst;
    int extra = inst.p - r;
    const Graph& g = inst.graph;
    std::vector<Edge> edges = g.edges();
    int n = g.vertex_count();
    for (int i = 0; i < extra; ++i) edges.push_back({n + 2 * i, n + 2 * i + 1});
    return {Graph(n + 2 * extra, std::move(edges)), inst.l + extra, inst.p};
}

namespace {

class DivideColor {
public:
    DivideColor(const MecsInstance& padded, const DivideColorOptions& opts)
        : g_(padded.graph), q_(padded.l / padded.p), opts_(opts) {
        log_term_ = std::log(4.0 * std::max(1, padded.l));
    }

    std::optional<std::vector<std::vector<EdgeId>>> run(int a) {
        std::vector<EdgeId> all(g_.edge_count());
        for (EdgeId e = 0; e < g_.edge_count(); ++e) all[e] = e;
        return solve(all, a, CounterRng(opts_.seed));
    }

    std::uint64_t base_calls() const { return calls_; }
    bool budget_hit() const { return budget_hit_; }

    std::uint64_t rounds(int a) const {
        double r = std::ceil(opts_.rounds_factor * std::ldexp(1.0, a * q_) * log_term_);
        if (r < 1.0) return 1;
        if (r > 1e18) return static_cast<std::uint64_t>(1e18);
        return static_cast<std::uint64_t>(r);
    }

    // Success probability lower bound of D*(a, q) given the round schedule.
    double confidence(int a) const {
        if (a == 1) return 1.0;
        double sub = confidence(a / 2) * confidence(a - a / 2);
        double per_round = std::ldexp(1.0, -a * q_) * sub;
        return -std::expm1(static_cast<double>(rounds(a)) * std::log1p(-per_round));
    }

private:
    std::optional<std::vector<std::vector<EdgeId>>> solve(const std::vector<EdgeId>& x, int a, CounterRng rng) {
        if (budget_hit_) return std::nullopt;
        if (static_cast<long long>(x.size()) < static_cast<long long>(a) * q_) return std::nullopt;
        if (a == 1) {
            if (++calls_ > opts_.work_budget) {
                budget_hit_ = true;
                return std::nullopt;
            }
            if ((calls_ & 0x3ff) == 0) opts_.deadline.check("divide-and-color");
            Matching m = max_matching(g_, x);
            if (static_cast<int>(m.size()) < q_) return std::nullopt;
            m.edges.resize(q_);
            return std::vector<std::vector<EdgeId>>{m.edges};
        }
        const std::uint64_t total = rounds(a);
        for (std::uint64_t round = 0; round < total && !budget_hit_; ++round) {
            CounterRng rr = rng.split(round);
            std::vector<EdgeId> left;
            std::vector<EdgeId> right;
            for (EdgeId e : x) (rr.bit() ? right : left).push_back(e);
            auto lo = solve(left, a / 2, rr.split(1));
            if (!lo) continue;
            auto hi = solve(right, a - a / 2, rr.split(2));
            if (!hi) continue;
            lo->insert(lo->end(), hi->begin(), hi->end());
            return lo;
        }
        return std::nullopt;
    }

    const Graph& g_;
    int q_;
    const DivideColorOptions& opts_;
    double log_term_ = 0.0;
    std::uint64_t calls_ = 0;
    bool budget_hit_ = false;
};

}  // namespace

DivideColorResult divide_and_color(const MecsInstance& inst, const DivideColorOptions& opts) {
    validate_instance(inst);
    const int m = inst.graph.edge_count();
    DivideColorResult res;
    res.solution.witness = EdgeColoring(m, inst.p);
    if (inst.l == 0) {
        res.solution.verdict = Verdict::Yes;
        res.confidence = 1.0;
        return res;
    }
    if (inst.l > opts.l_cap) {
        throw BudgetExceeded("divide-and-color: l = " + std::to_string(inst.l) + " exceeds the cap of " +
                             std::to_string(opts.l_cap));
    }
    MecsInstance padded = pad_to_multiple(inst);
    DivideColor dc(padded, opts);
    auto blocks = dc.run(padded.p);
    res.base_calls = dc.base_calls();
    res.budget_hit = dc.budget_hit();
    res.confidence = dc.confidence(padded.p);
    if (!blocks) return res;
    for (std::size_t c = 0; c < blocks->size(); ++c) {
        for (EdgeId e : (*blocks)[c]) {
            if (e < m) res.solution.witness.assign(e, static_cast<int>(c) + 1);
        }
    }
    if (!verify_coloring(res.solution.witness, inst.graph) || res.solution.witness.colored_count() < inst.l) {
        throw std::logic_error("divide-and-color assembled an invalid witness");
    }
    res.solution.verdict = Verdict::Yes;
    return res;
}

RainbowInstance reduce_to_rainbow(const MecsInstance& inst) {
    validate_instance(inst);
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Edge> edges;
    std::vector<int> labels;
    edges.reserve(static_cast<std::size_t>(m) * inst.p);
    for (int copy = 0; copy < inst.p; ++copy) {
        for (EdgeId e = 0; e < m; ++e) {
            edges.push_back({copy * n + g.edge(e).u, copy * n + g.edge(e).v});
            labels.push_back(e + 1);
        }
    }
    return {{Graph(n * inst.p, std::move(edges)), std::move(labels)}, inst.l};
}

namespace {

// Branches label by label: use one of its edges or skip it. Bound: matched so far
// plus min(labels still usable, maximum matching of the still usable edges).
class RainbowSearch {
public:
    RainbowSearch(const RainbowInstance& ri, const Deadline& deadline)
        : g_(ri.lg.graph), k_(ri.k), deadline_(deadline), used_(g_.vertex_count(), false) {
        std::vector<int> labels = ri.lg.labels;
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        groups_.resize(labels.size());
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            auto it = std::lower_bound(labels.begin(), labels.end(), ri.lg.labels[e]);
            groups_[it - labels.begin()].push_back(e);
        }
    }

    std::optional<Matching> run() {
        if (dfs(0)) {
            Matching m{chosen_};
            std::sort(m.edges.begin(), m.edges.end());
            return m;
        }
        return std::nullopt;
    }

private:
    bool free_edge(EdgeId e) const { return !used_[g_.edge(e).u] && !used_[g_.edge(e).v]; }

    int bound(std::size_t from) const {
        int labels_left = 0;
        std::vector<EdgeId> open;
        for (std::size_t i = from; i < groups_.size(); ++i) {
            bool any = false;
            for (EdgeId e : groups_[i]) {
                if (free_edge(e)) {
                    open.push_back(e);
                    any = true;
                }
            }
            labels_left += any ? 1 : 0;
        }
        if (static_cast<int>(chosen_.size()) + labels_left < k_) return labels_left;
        return std::min(labels_left, static_cast<int>(max_matching(g_, open).size()));
    }

    bool dfs(std::size_t i) {
        if (static_cast<int>(chosen_.size()) >= k_) return true;
        if ((++nodes_ & 0x3ff) == 0) deadline_.check("rainbow matching search");
        if (i == groups_.size()) return false;
        if (static_cast<int>(chosen_.size()) + bound(i) < k_) return false;
        for (EdgeId e : groups_[i]) {
            if (!free_edge(e)) continue;
            used_[g_.edge(e).u] = used_[g_.edge(e).v] = true;
            chosen_.push_back(e);
            if (dfs(i + 1)) return true;
            chosen_.pop_back();
            used_[g_.edge(e).u] = used_[g_.edge(e).v] = false;
        }
        return dfs(i + 1);
    }

    const Graph& g_;
    int k_;
    const Deadline& deadline_;
    std::vector<bool> used_;
    std::vector<std::vector<EdgeId>> groups_;
    std::vector<EdgeId> chosen_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Matching> rainbow_matching_exact(const RainbowInstance& ri, const RainbowOptions& opts) {
    if (ri.k < 0) throw std::invalid_argument("rainbow target must be non-negative");
    if (ri.k > opts.k_cap) {
        throw BudgetExceeded("rainbow matching: k = " + std::to_string(ri.k) + " exceeds the cap of " +
                             std::to_string(opts.k_cap));
    }
    if (static_cast<int>(ri.lg.labels.size()) != ri.lg.graph.edge_count()) {
        throw std::invalid_argument("every edge needs exactly one label");
    }
    return RainbowSearch(ri, opts.deadline).run();
}

MecsSolution solve_via_rainbow(const MecsInstance& inst, const RainbowOptions& opts) {
    validate_instance(inst);
    const int m = inst.graph.edge_count();
    MecsSolution sol;
    sol.witness = EdgeColoring(m, inst.p);
    if (inst.l == 0) {
        sol.verdict = Verdict::Yes;
        return sol;
    }
    auto found = rainbow_matching_exact(reduce_to_rainbow(inst), opts);
    if (!found) return sol;
    for (EdgeId j : found->edges) sol.witness.assign(j % m, j / m + 1);
    if (!verify_coloring(sol.witness, inst.graph) || sol.witness.colored_count() < inst.l) {
        throw std::logic_error("rainbow back-translation produced an invalid witness");
    }
    sol.verdict = Verdict::Yes;
    return sol;
}

}  // namespace mecs
