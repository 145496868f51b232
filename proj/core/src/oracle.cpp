#include "mecs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mecs/coloring.hpp"
#include "mecs/matching.hpp"

namespace mecs {

const char* to_string(Verdict v) { return v == Verdict::Yes ? "YES" : "NO"; }

namespace {

using Mask = std::uint64_t;

// Backtracking edge coloring: most constrained edge first (ties: higher endpoint
// degree, then lower id). With symmetry breaking a fresh color is only tried once.
class ColorSearch {
public:
    ColorSearch(const Graph& g, int p, const std::vector<char>& active, const Deadline& deadline)
        : g_(g), p_(p), active_(active), deadline_(deadline), used_(g.vertex_count(), 0),
          color_(g.edge_count(), 0) {
        if (p > 63) throw std::invalid_argument("backtracking coloring supports at most 63 colors");
        full_ = (Mask{1} << (p + 1)) - 2;
        deg_.assign(g.vertex_count(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!active_[e]) continue;
            ++deg_[g.edge(e).u];
            ++deg_[g.edge(e).v];
        }
    }

    bool fix(EdgeId e, int c) {
        const Edge& ed = g_.edge(e);
        Mask bit = Mask{1} << c;
        if ((used_[ed.u] | used_[ed.v]) & bit) return false;
        place(e, c);
        max_used_ = std::max(max_used_, c);
        return true;
    }

    bool find_one() {
        symmetry_ = true;
        return search_one();
    }

    std::uint64_t enumerate(const std::function<bool(const std::vector<int>&)>& visit) {
        symmetry_ = false;
        visit_ = &visit;
        stop_ = false;
        count_ = 0;
        search_all();
        return count_;
    }

    const std::vector<int>& colors() const { return color_; }

private:
    void place(EdgeId e, int c) {
        const Edge& ed = g_.edge(e);
        color_[e] = c;
        used_[ed.u] |= Mask{1} << c;
        used_[ed.v] |= Mask{1} << c;
    }

    void unplace(EdgeId e) {
        const Edge& ed = g_.edge(e);
        Mask bit = Mask{1} << color_[e];
        used_[ed.u] &= ~bit;
        used_[ed.v] &= ~bit;
        color_[e] = 0;
    }

    // Returns -1 when some open edge has no color left, else the edge to branch on
    // (or g.edge_count() when all are colored).
    EdgeId select(Mask& avail_out) const {
        EdgeId best = g_.edge_count();
        int best_count = 64;
        int best_deg = -1;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (!active_[e] || color_[e] != 0) continue;
            const Edge& ed = g_.edge(e);
            Mask avail = full_ & ~(used_[ed.u] | used_[ed.v]);
            int count = std::popcount(avail);
            if (count == 0) return -1;
            int deg = deg_[ed.u] + deg_[ed.v];
            if (count < best_count || (count == best_count && deg > best_deg)) {
                best = e;
                best_count = count;
                best_deg = deg;
                avail_out = avail;
            }
        }
        return best;
    }

    void tick() {
        if ((++nodes_ & 0xfff) == 0) deadline_.check("edge coloring search");
    }

    bool search_one() {
        tick();
        Mask avail = 0;
        EdgeId e = select(avail);
        if (e < 0) return false;
        if (e == g_.edge_count()) return true;
        int saved_max = max_used_;
        for (int c = 1; c <= p_; ++c) {
            if (!(avail & (Mask{1} << c))) continue;
            if (symmetry_ && c > max_used_ + 1) break;
            place(e, c);
            max_used_ = std::max(saved_max, c);
            if (search_one()) return true;
            unplace(e);
            max_used_ = saved_max;
        }
        return false;
    }

    void search_all() {
        tick();
        Mask avail = 0;
        EdgeId e = select(avail);
        if (e < 0) return;
        if (e == g_.edge_count()) {
            ++count_;
            if (!(*visit_)(color_)) stop_ = true;
            return;
        }
        for (int c = 1; c <= p_ && !stop_; ++c) {
            if (!(avail & (Mask{1} << c))) continue;
            place(e, c);
            search_all();
            unplace(e);
        }
    }

    const Graph& g_;
    int p_;
    const std::vector<char>& active_;
    const Deadline& deadline_;
    std::vector<Mask> used_;
    std::vector<int> color_;
    std::vector<int> deg_;
    Mask full_ = 0;
    int max_used_ = 0;
    bool symmetry_ = true;
    std::uint64_t nodes_ = 0;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
    bool stop_ = false;
    std::uint64_t count_ = 0;
};

int optimum_upper_bound(const Graph& g, int p) {
    long long half_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) half_sum += std::min(g.degree(v), p);
    long long ub = std::min<long long>(g.edge_count(), half_sum / 2);
    ub = std::min<long long>(ub, static_cast<long long>(p) * static_cast<long long>(max_matching(g).size()));
    return static_cast<int>(ub);
}

class SubsetSearch {
public:
    SubsetSearch(const Graph& g, int p, const Deadline& deadline)
        : g_(g), p_(p), deadline_(deadline), active_(g.edge_count(), 1), deg_(g.vertex_count()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            deg_[v] = g.degree(v);
            excess_total_ += std::max(0, deg_[v] - p);
        }
    }

    // Tries every deletion set of the given size in lexicographic order.
    std::optional<std::vector<int>> with_deletions(int count) { return recurse(0, count); }

private:
    void toggle(EdgeId e, bool remove) {
        const Edge& ed = g_.edge(e);
        for (Vertex v : {ed.u, ed.v}) {
            excess_total_ -= std::max(0, deg_[v] - p_);
            deg_[v] += remove ? -1 : 1;
            excess_total_ += std::max(0, deg_[v] - p_);
        }
        active_[e] = remove ? 0 : 1;
    }

    std::optional<std::vector<int>> recurse(EdgeId start, int left) {
        if (excess_total_ > 2 * left) return std::nullopt;
        if (left == 0) return test();
        for (EdgeId e = start; e + left <= g_.edge_count(); ++e) {
            toggle(e, true);
            auto found = recurse(e + 1, left - 1);
            toggle(e, false);
            if (found) return found;
        }
        return std::nullopt;
    }

    std::optional<std::vector<int>> test() {
        if ((++tests_ & 0xff) == 0) deadline_.check("exact solver");
        int delta = 0;
        for (int d : deg_) delta = std::max(delta, d);
        if (delta <= p_ - 1) {
            std::vector<EdgeId> kept;
            for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                if (active_[e]) kept.push_back(e);
            }
            EdgeColoring sub = vizing_color(edge_subgraph(g_, kept));
            std::vector<int> colors(g_.edge_count(), 0);
            for (std::size_t i = 0; i < kept.size(); ++i) colors[kept[i]] = sub.color(static_cast<EdgeId>(i));
            return colors;
        }
        return find_edge_coloring(g_, p_, active_, deadline_);
    }

    const Graph& g_;
    int p_;
    const Deadline& deadline_;
    std::vector<char> active_;
    std::vector<int> deg_;
    int excess_total_ = 0;
    std::uint64_t tests_ = 0;
};

}  // namespace

std::optional<std::vector<int>> find_edge_coloring(const Graph& g, int p, const std::vector<char>& active,
                                                   const Deadline& deadline) {
    ColorSearch s(g, p, active, deadline);
    if (!s.find_one()) return std::nullopt;
    return s.colors();
}

std::optional<EdgeColoring> find_edge_coloring(const Graph& g, int p, const Deadline& deadline) {
    std::vector<char> active(g.edge_count(), 1);
    auto colors = find_edge_coloring(g, p, active, deadline);
    if (!colors) return std::nullopt;
    EdgeColoring out(g.edge_count(), p);
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.assign(e, (*colors)[e]);
    return out;
}

std::uint64_t enumerate_edge_colorings(const Graph& g, int p, const std::vector<int>& fixed,
                                       const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<char> active(g.edge_count(), 1);
    Deadline none;
    ColorSearch s(g, p, active, none);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e < static_cast<EdgeId>(fixed.size()) && fixed[e] != 0) {
            if (fixed[e] > p || !s.fix(e, fixed[e])) return 0;
        }
    }
    return s.enumerate(visit);
}

MecsSolution solve_exact(const MecsInstance& inst, const OracleOptions& opts) {
    validate_instance(inst);
    const Graph& g = inst.graph;
    if (g.edge_count() > opts.edge_cap) {
        throw InstanceTooLarge("exact solver: " + std::to_string(g.edge_count()) + " edges exceed the cap of " +
                               std::to_string(opts.edge_cap));
    }
    SubsetSearch search(g, inst.p, opts.deadline);
    const int m = g.edge_count();
    for (int kept = optimum_upper_bound(g, inst.p); kept >= 0; --kept) {
        auto colors = search.with_deletions(m - kept);
        if (!colors) continue;
        MecsSolution sol;
        sol.optimum = kept;
        sol.verdict = kept >= inst.l ? Verdict::Yes : Verdict::No;
        sol.witness = EdgeColoring(m, inst.p);
        if (sol.yes()) {
            for (EdgeId e = 0; e < m; ++e) sol.witness.assign(e, (*colors)[e]);
        }
        return sol;
    }
    throw std::logic_error("exact solver found no colorable subgraph");
}

int chromatic_index_exact(const Graph& g, const OracleOptions& opts) {
    if (g.edge_count() > opts.edge_cap) {
        throw InstanceTooLarge("chromatic index: " + std::to_string(g.edge_count()) + " edges exceed the cap of " +
                               std::to_string(opts.edge_cap));
    }
    if (g.edge_count() == 0) return 0;
    int delta = g.max_degree();
    if (find_edge_coloring(g, delta, opts.deadline)) return delta;
    if (!find_edge_coloring(g, delta + 1, opts.deadline)) {
        throw std::logic_error("chromatic index exceeds max degree + 1");
    }
    return delta + 1;
}

}  // namespace mecs
