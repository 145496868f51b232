#include "mecs/ilp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "mecs/matching.hpp"

namespace mecs {

int TypeContext::is_present(int cover_pos, const TypeTuple& t) const {
    return std::find(t.x_prime.begin(), t.x_prime.end(), cover_pos) != t.x_prime.end() ? 1 : 0;
}

int TypeContext::false_twins(Vertex w) const {
    auto it = gamma.find(neighborhood[w]);
    return it == gamma.end() ? 0 : static_cast<int>(it->second.size());
}

int TypeContext::nr_nbr_present(Vertex w, const TypeTuple& t) const {
    return static_cast<int>(std::count(t.slots.begin(), t.slots.end(), neighborhood[w]));
}

TypeContext make_type_context(const Graph& g, std::vector<Vertex> cover) {
    std::sort(cover.begin(), cover.end());
    if (cover.size() > 31) throw std::invalid_argument("cover too large for type masks");
    TypeContext ctx;
    ctx.cover = cover;
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < cover.size(); ++i) pos[cover[i]] = static_cast<int>(i);
    ctx.neighborhood.assign(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] >= 0) ctx.neighborhood[v] |= VertexMask{1} << pos[w];
        }
        if (pos[v] >= 0) continue;
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] < 0) throw std::invalid_argument("cover misses an edge");
        }
        ctx.rest.push_back(v);
        if (ctx.neighborhood[v] != 0) ctx.gamma[ctx.neighborhood[v]].push_back(v);
    }
    return ctx;
}

std::vector<TypeTuple> enumerate_types(const TypeContext& ctx, std::size_t cap) {
    const int k = static_cast<int>(ctx.cover.size());
    std::vector<std::pair<VertexMask, int>> classes;
    for (const auto& [mask, members] : ctx.gamma) classes.emplace_back(mask, static_cast<int>(members.size()));
    std::vector<int> used(classes.size(), 0);
    std::vector<TypeTuple> out;
    TypeTuple cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            if (out.size() >= cap) throw BudgetExceeded("type enumeration exceeds the cap of " + std::to_string(cap));
            TypeTuple t = cur;
            t.slots.resize(k, 0);
            out.push_back(std::move(t));
            return;
        }
        self(self, i + 1);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            auto [mask, limit] = classes[c];
            if (!(mask & (VertexMask{1} << i)) || used[c] >= limit) continue;
            ++used[c];
            cur.x_prime.push_back(i);
            cur.slots.push_back(mask);
            self(self, i + 1);
            cur.slots.pop_back();
            cur.x_prime.pop_back();
            --used[c];
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<PartialGuess> enumerate_guesses(const Graph& g, const TypeContext& ctx, int p) {
    std::vector<bool> in_cover(g.vertex_count(), false);
    for (Vertex v : ctx.cover) in_cover[v] = true;
    std::vector<EdgeId> inner;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_cover[g.edge(e).u] && in_cover[g.edge(e).v]) inner.push_back(e);
    }
    if (inner.size() > 20) throw BudgetExceeded("too many edges inside the vertex cover");
    std::vector<PartialGuess> out;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << inner.size()); ++subset) {
        PartialGuess base;
        for (std::size_t j = 0; j < inner.size(); ++j) {
            if (subset & (std::uint32_t{1} << j)) base.h_prime.push_back(inner[j]);
        }
        // Proper colorings in restricted-growth form: every color class nonempty and
        // each coloring counted once up to renaming of colors.
        std::vector<int> colors(base.h_prime.size(), 0);
        auto rec = [&](auto&& self, std::size_t j, int used) -> void {
            if (j == colors.size()) {
                PartialGuess guess = base;
                guess.colors = colors;
                guess.p0 = used;
                out.push_back(std::move(guess));
                return;
            }
            const Edge& ej = g.edge(base.h_prime[j]);
            for (int c = 1; c <= std::min(used + 1, p); ++c) {
                bool clash = false;
                for (std::size_t i = 0; i < j && !clash; ++i) {
                    const Edge& ei = g.edge(base.h_prime[i]);
                    bool adjacent = ei.u == ej.u || ei.u == ej.v || ei.v == ej.u || ei.v == ej.v;
                    clash = adjacent && colors[i] == c;
                }
                if (clash) continue;
                colors[j] = c;
                self(self, j + 1, std::max(used, c));
            }
            colors[j] = 0;
        };
        rec(rec, 0, 0);
    }
    std::stable_sort(out.begin(), out.end(), [](const PartialGuess& a, const PartialGuess& b) {
        if (a.h_prime.size() != b.h_prime.size()) return a.h_prime.size() < b.h_prime.size();
        return a.p0 < b.p0;
    });
    return out;
}

std::string IlpModel::variable_name(int var) const {
    return "Y_t" + std::to_string(variables[var].first) + "_a" + std::to_string(variables[var].second);
}

int IlpModel::variable_index(int type, int alpha) const { return type * alphas + alpha; }

IlpModel build_ilp(const Graph& g, const TypeContext& ctx, const std::vector<TypeTuple>& types,
                   const PartialGuess& guess, int p) {
    IlpModel model;
    model.alphas = guess.p0 + 1;
    const int nt = static_cast<int>(types.size());
    for (int t = 0; t < nt; ++t) {
        for (int a = 0; a <= guess.p0; ++a) {
            model.variables.emplace_back(t, a);
            model.objective.push_back(types[t].size());
            model.upper.push_back(p);
        }
    }
    const int k = static_cast<int>(ctx.cover.size());
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) pos[ctx.cover[i]] = i;
    std::vector<int> hdeg(k, 0);
    std::vector<std::vector<int>> hcolors(k);
    for (std::size_t j = 0; j < guess.h_prime.size(); ++j) {
        const Edge& e = g.edge(guess.h_prime[j]);
        for (Vertex v : {e.u, e.v}) {
            ++hdeg[pos[v]];
            hcolors[pos[v]].push_back(guess.colors[j]);
        }
    }

    for (int i = 0; i < k; ++i) {
        LinearConstraint c{"I", {}, p - hdeg[i]};
        for (int t = 0; t < nt; ++t) {
            if (!ctx.is_present(i, types[t])) continue;
            for (int a = 0; a <= guess.p0; ++a) c.terms.emplace_back(model.variable_index(t, a), 1);
        }
        model.constraints.push_back(std::move(c));
    }
    for (int i = 0; i < k; ++i) {
        for (int color : hcolors[i]) {
            for (int t = 0; t < nt; ++t) {
                if (!ctx.is_present(i, types[t])) continue;
                model.constraints.push_back({"II", {{model.variable_index(t, color), 1}}, 0});
            }
        }
    }
    for (const auto& [mask, members] : ctx.gamma) {
        LinearConstraint c{"III", {}, p * static_cast<int>(members.size())};
        Vertex w = members.front();
        for (int t = 0; t < nt; ++t) {
            int coef = ctx.nr_nbr_present(w, types[t]);
            if (coef == 0) continue;
            for (int a = 0; a <= guess.p0; ++a) c.terms.emplace_back(model.variable_index(t, a), coef);
        }
        model.constraints.push_back(std::move(c));
    }
    for (int a = 1; a <= guess.p0; ++a) {
        LinearConstraint c{"IV", {}, 1};
        for (int t = 0; t < nt; ++t) c.terms.emplace_back(model.variable_index(t, a), 1);
        model.constraints.push_back(std::move(c));
    }
    LinearConstraint all{"V", {}, p};
    for (int v = 0; v < static_cast<int>(model.variables.size()); ++v) all.terms.emplace_back(v, 1);
    model.constraints.push_back(std::move(all));
    // Fresh colors start above p0, so at most p - p0 matchings may use them.
    LinearConstraint fresh{"V0", {}, p - guess.p0};
    for (int t = 0; t < nt; ++t) fresh.terms.emplace_back(model.variable_index(t, 0), 1);
    model.constraints.push_back(std::move(fresh));
    // A cover vertex reaches a neighborhood class through at most |class| distinct edges.
    for (const auto& [mask, members] : ctx.gamma) {
        for (int i = 0; i < k; ++i) {
            if (!(mask & (VertexMask{1} << i))) continue;
            LinearConstraint c{"VI", {}, static_cast<int>(members.size())};
            for (int t = 0; t < nt; ++t) {
                const TypeTuple& tt = types[t];
                auto it = std::find(tt.x_prime.begin(), tt.x_prime.end(), i);
                if (it == tt.x_prime.end() || tt.slots[it - tt.x_prime.begin()] != mask) continue;
                for (int a = 0; a <= guess.p0; ++a) c.terms.emplace_back(model.variable_index(t, a), 1);
            }
            if (!c.terms.empty()) model.constraints.push_back(std::move(c));
        }
    }
    return model;
}

void write_lp(std::ostream& os, const IlpModel& model) {
    auto sum = [&](const std::vector<std::pair<int, int>>& terms) {
        if (terms.empty()) {
            os << "0";
            return;
        }
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i > 0) os << " + ";
            os << terms[i].second << "*" << model.variable_name(terms[i].first);
        }
    };
    std::vector<std::pair<int, int>> obj;
    for (int v = 0; v < static_cast<int>(model.objective.size()); ++v) {
        if (model.objective[v] != 0) obj.emplace_back(v, model.objective[v]);
    }
    os << "maximize ";
    sum(obj);
    os << "\n";
    for (const auto& c : model.constraints) {
        sum(c.terms);
        os << " <= " << c.rhs << "\n";
    }
    for (int v = 0; v < static_cast<int>(model.upper.size()); ++v) {
        os << "1*" << model.variable_name(v) << " <= " << model.upper[v] << "\n";
    }
}

bool satisfies(const IlpModel& model, const std::vector<int>& values) {
    if (values.size() != model.variables.size()) return false;
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (values[v] < 0 || values[v] > model.upper[v]) return false;
    }
    for (const auto& c : model.constraints) {
        long long lhs = 0;
        for (auto [v, coef] : c.terms) lhs += static_cast<long long>(coef) * values[v];
        if (lhs > c.rhs) return false;
    }
    return true;
}

namespace {

constexpr double kEps = 1e-9;

// Dense two-phase simplex for max c.x subject to A x <= b, x >= 0 (Bland-style ties).
class Simplex {
public:
    Simplex(const std::vector<std::vector<double>>& a, const std::vector<double>& b, const std::vector<double>& c)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())), basis_(m_), nonbasis_(n_ + 1),
          d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
            basis_[i] = n_ + i;
            d_[i][n_] = -1;
            d_[i][n_ + 1] = b[i];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasis_[j] = j;
            d_[m_][j] = -c[j];
        }
        nonbasis_[n_] = -1;
        d_[m_ + 1][n_] = 1;
    }

    // Returns false when infeasible; the problem is bounded by construction.
    bool solve(std::vector<double>& x, double& value) {
        int r = 0;
        for (int i = 1; i < m_; ++i) {
            if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
        }
        if (m_ > 0 && d_[r][n_ + 1] < -kEps) {
            pivot(r, n_);
            if (!run(1) || d_[m_ + 1][n_ + 1] < -kEps) return false;
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] != -1) continue;
                int s = -1;
                for (int j = 0; j <= n_; ++j) {
                    if (s == -1 || d_[i][j] < d_[i][s] || (d_[i][j] == d_[i][s] && nonbasis_[j] < nonbasis_[s])) s = j;
                }
                pivot(i, s);
            }
        }
        if (!run(2)) throw std::logic_error("linear relaxation is unbounded");
        x.assign(n_, 0.0);
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= 0 && basis_[i] < n_) x[basis_[i]] = d_[i][n_ + 1];
        }
        value = d_[m_][n_ + 1];
        return true;
    }

private:
    void pivot(int r, int s) {
        double inv = 1.0 / d_[r][s];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || d_[i][s] == 0.0) continue;
            double f = d_[i][s] * inv;
            for (int j = 0; j < n_ + 2; ++j) {
                if (j != s) d_[i][j] -= d_[r][j] * f;
            }
            d_[i][s] = -f;
        }
        for (int j = 0; j < n_ + 2; ++j) {
            if (j != s) d_[r][j] *= inv;
        }
        d_[r][s] = inv;
        std::swap(basis_[r], nonbasis_[s]);
    }

    bool run(int phase) {
        int row = phase == 1 ? m_ + 1 : m_;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasis_[j] == -1) continue;
                if (s == -1 || d_[row][j] < d_[row][s] || (d_[row][j] == d_[row][s] && nonbasis_[j] < nonbasis_[s])) s = j;
            }
            if (d_[row][s] > -kEps) return true;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (d_[i][s] < kEps) continue;
                if (r == -1) {
                    r = i;
                    continue;
                }
                double lhs = d_[i][n_ + 1] / d_[i][s];
                double rhs = d_[r][n_ + 1] / d_[r][s];
                if (lhs < rhs - kEps || (lhs <= rhs + kEps && basis_[i] < basis_[r])) r = i;
            }
            if (r == -1) return false;
            pivot(r, s);
        }
    }

    int m_, n_;
    std::vector<int> basis_, nonbasis_;
    std::vector<std::vector<double>> d_;
};

class BranchAndBound {
public:
    BranchAndBound(const IlpModel& model, const IlpSolveOptions& opts) : model_(model), opts_(opts) {
        const std::size_t nv = model.variables.size();
        implied_.assign(nv, std::numeric_limits<double>::infinity());
        for (const auto& c : model.constraints) {
            bool nonneg = std::all_of(c.terms.begin(), c.terms.end(), [](auto t) { return t.second >= 0; });
            if (!nonneg) continue;
            for (auto [v, coef] : c.terms) {
                if (coef > 0) implied_[v] = std::min(implied_[v], std::max(0, c.rhs) / static_cast<double>(coef));
            }
        }
    }

    IlpSolution run() {
        const std::size_t nv = model_.variables.size();
        best_.values.assign(nv, 0);
        best_.objective = 0;
        if (!satisfies(model_, best_.values)) {
            best_.objective = std::numeric_limits<long long>::min();
        }
        std::vector<int> lo(nv, 0);
        std::vector<int> hi = model_.upper;
        branch(lo, hi);
        if (best_.objective == std::numeric_limits<long long>::min()) {
            throw std::runtime_error("integer program is infeasible");
        }
        return best_;
    }

private:
    void branch(std::vector<int>& lo, std::vector<int>& hi) {
        if (++nodes_ > opts_.node_cap) throw BudgetExceeded("integer program exceeds the node cap");
        if ((nodes_ & 0x3f) == 0) opts_.deadline.check("integer program");
        std::vector<double> x;
        double value = 0;
        if (!relax(lo, hi, x, value)) return;
        if (best_.objective != std::numeric_limits<long long>::min() &&
            static_cast<long long>(std::floor(value + 1e-6)) <= best_.objective) {
            return;
        }
        int pick = -1;
        double frac_best = 1e-6;
        for (std::size_t v = 0; v < x.size(); ++v) {
            double frac = std::abs(x[v] - std::round(x[v]));
            if (frac > frac_best + 1e-12) {
                frac_best = frac;
                pick = static_cast<int>(v);
            }
        }
        if (pick < 0) {
            std::vector<int> values(x.size());
            for (std::size_t v = 0; v < x.size(); ++v) values[v] = static_cast<int>(std::lround(x[v]));
            if (!satisfies(model_, values)) throw std::logic_error("rounded relaxation violates the model");
            long long obj = 0;
            for (std::size_t v = 0; v < values.size(); ++v) obj += static_cast<long long>(model_.objective[v]) * values[v];
            if (obj > best_.objective) best_ = {obj, std::move(values)};
            return;
        }
        int down = static_cast<int>(std::floor(x[pick]));
        int saved_hi = hi[pick];
        hi[pick] = down;
        branch(lo, hi);
        hi[pick] = saved_hi;
        int saved_lo = lo[pick];
        lo[pick] = down + 1;
        if (lo[pick] <= hi[pick]) branch(lo, hi);
        lo[pick] = saved_lo;
    }

    // LP over the shifted variables y = x - lo, dropping variables fixed by bounds.
    bool relax(const std::vector<int>& lo, const std::vector<int>& hi, std::vector<double>& x, double& value) {
        const std::size_t nv = model_.variables.size();
        std::vector<int> col(nv, -1);
        std::vector<int> free_vars;
        for (std::size_t v = 0; v < nv; ++v) {
            if (lo[v] > hi[v]) return false;
            if (hi[v] > lo[v]) {
                col[v] = static_cast<int>(free_vars.size());
                free_vars.push_back(static_cast<int>(v));
            }
        }
        const int n = static_cast<int>(free_vars.size());
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (const auto& c : model_.constraints) {
            std::vector<double> row(n, 0.0);
            double rhs = c.rhs;
            bool any = false;
            for (auto [v, coef] : c.terms) {
                rhs -= static_cast<double>(coef) * lo[v];
                if (col[v] >= 0) {
                    row[col[v]] += coef;
                    any = true;
                }
            }
            if (!any) {
                if (rhs < -kEps) return false;
                continue;
            }
            a.push_back(std::move(row));
            b.push_back(rhs);
        }
        for (int j = 0; j < n; ++j) {
            int v = free_vars[j];
            if (hi[v] >= implied_[v] && lo[v] == 0) continue;
            std::vector<double> row(n, 0.0);
            row[j] = 1.0;
            a.push_back(std::move(row));
            b.push_back(hi[v] - lo[v]);
        }
        std::vector<double> c(n);
        double base = 0;
        for (std::size_t v = 0; v < nv; ++v) base += static_cast<double>(model_.objective[v]) * lo[v];
        for (int j = 0; j < n; ++j) c[j] = model_.objective[free_vars[j]];
        std::vector<double> y;
        double obj = 0;
        if (n == 0) {
            y.clear();
        } else {
            Simplex lp(a, b, c);
            if (!lp.solve(y, obj)) return false;
        }
        x.assign(nv, 0.0);
        for (std::size_t v = 0; v < nv; ++v) x[v] = lo[v];
        for (int j = 0; j < n; ++j) x[free_vars[j]] += y[j];
        value = base + obj;
        return true;
    }

    const IlpModel& model_;
    const IlpSolveOptions& opts_;
    std::vector<double> implied_;
    IlpSolution best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IlpSolution solve_ilp(const IlpModel& model, const IlpSolveOptions& opts) {
    return BranchAndBound(model, opts).run();
}

namespace {

// Proper edge coloring of a bipartite graph with `colors` colors (needs max degree <= colors).
class BipartiteColorer {
public:
    BipartiteColorer(int left, int right, int colors)
        : colors_(colors), left_(left, std::vector<int>(colors, -1)), right_(right, std::vector<int>(colors, -1)) {}

    int add(int a, int b) {
        int id = static_cast<int>(ends_.size());
        ends_.emplace_back(a, b);
        color_.push_back(0);
        for (int c = 0; c < colors_; ++c) {
            if (left_[a][c] < 0 && right_[b][c] < 0) {
                place(id, a, b, c);
                return id;
            }
        }
        int c = free_color(left_[a]);
        int d = free_color(right_[b]);
        if (c < 0 || d < 0) throw ReconstructionFailure("neighborhood class too small for its demand");
        // Swap c and d along the alternating path leaving b; it cannot reach a.
        std::vector<int> path;
        int cur = b;
        bool on_right = true;
        int want = c;
        for (;;) {
            int e = on_right ? right_[cur][want] : left_[cur][want];
            if (e < 0) break;
            path.push_back(e);
            cur = on_right ? ends_[e].first : ends_[e].second;
            on_right = !on_right;
            want = want == c ? d : c;
        }
        for (int e : path) {
            left_[ends_[e].first][color_[e]] = -1;
            right_[ends_[e].second][color_[e]] = -1;
        }
        for (int e : path) {
            color_[e] = color_[e] == c ? d : c;
            left_[ends_[e].first][color_[e]] = e;
            right_[ends_[e].second][color_[e]] = e;
        }
        place(id, a, b, c);
        return id;
    }

    int color(int id) const { return color_[id]; }

private:
    void place(int id, int a, int b, int c) {
        color_[id] = c;
        left_[a][c] = id;
        right_[b][c] = id;
    }

    int free_color(const std::vector<int>& at) const {
        for (int c = 0; c < colors_; ++c) {
            if (at[c] < 0) return c;
        }
        return -1;
    }

    int colors_;
    std::vector<std::vector<int>> left_, right_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int> color_;
};

}  // namespace

EdgeColoring reconstruct(const Graph& g, const TypeContext& ctx, const std::vector<TypeTuple>& types,
                         const PartialGuess& guess, const IlpModel& model, const std::vector<int>& values, int p) {
    EdgeColoring out(g.edge_count(), p);
    for (std::size_t j = 0; j < guess.h_prime.size(); ++j) out.assign(guess.h_prime[j], guess.colors[j]);

    // One row per matching: reserved colors first, then fresh colors from p0 + 1.
    std::vector<std::pair<int, int>> rows;  // (type, color)
    for (int a = 1; a < model.alphas; ++a) {
        for (std::size_t t = 0; t < types.size(); ++t) {
            int y = values[model.variable_index(static_cast<int>(t), a)];
            if (y > 1) throw ReconstructionFailure("a reserved color is used by more than one matching");
            if (y == 1) rows.emplace_back(static_cast<int>(t), a);
        }
    }
    int next = guess.p0 + 1;
    for (std::size_t t = 0; t < types.size(); ++t) {
        int y = values[model.variable_index(static_cast<int>(t), 0)];
        for (int beta = 0; beta < y; ++beta) rows.emplace_back(static_cast<int>(t), next++);
    }
    if (next - 1 > p) throw ReconstructionFailure("reconstruction needs more than p colors");

    // Per class, cells (row, cover position) get distinct members along rows and columns.
    const int k = static_cast<int>(ctx.cover.size());
    for (const auto& [mask, members] : ctx.gamma) {
        BipartiteColorer colorer(static_cast<int>(rows.size()), k, static_cast<int>(members.size()));
        std::vector<std::tuple<int, int, int>> cells;  // (row, cover position, id)
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const TypeTuple& t = types[rows[r].first];
            for (std::size_t i = 0; i < t.x_prime.size(); ++i) {
                if (t.slots[i] != mask) continue;
                cells.emplace_back(static_cast<int>(r), t.x_prime[i], colorer.add(static_cast<int>(r), t.x_prime[i]));
            }
        }
        for (auto [r, i, id] : cells) {
            auto e = g.find_edge(ctx.cover[i], members[colorer.color(id)]);
            if (!e) throw ReconstructionFailure("type slot does not match the graph");
            out.assign(*e, rows[r].second);
        }
    }
    return out;
}

MecsSolution solve_via_ilp(const MecsInstance& inst, const IlpOptions& opts) {
    validate_instance(inst);
    const Graph& g = inst.graph;
    auto cover = min_vertex_cover(g, opts.vc_cap);
    if (!cover) {
        throw BudgetExceeded("vertex cover number exceeds the cap of " + std::to_string(opts.vc_cap));
    }
    TypeContext ctx = make_type_context(g, *cover);
    std::vector<TypeTuple> types = enumerate_types(ctx, opts.type_cap);
    std::vector<PartialGuess> guesses = enumerate_guesses(g, ctx, inst.p);
    IlpSolveOptions solve_opts{opts.node_cap, opts.deadline};
    MecsSolution sol;
    sol.witness = EdgeColoring(g.edge_count(), inst.p);
    long long best = -1;
    for (std::size_t gi = 0; gi < guesses.size(); ++gi) {
        const PartialGuess& guess = guesses[gi];
        opts.deadline.check("ilp guesses");
        IlpModel model = build_ilp(g, ctx, types, guess, inst.p);
        if (opts.dump) {
            *opts.dump << "# guess " << gi << " h_prime";
            for (std::size_t j = 0; j < guess.h_prime.size(); ++j) {
                *opts.dump << " " << guess.h_prime[j] << ":" << guess.colors[j];
            }
            *opts.dump << " p0 " << guess.p0 << "\n";
            write_lp(*opts.dump, model);
        }
        IlpSolution ilp = solve_ilp(model, solve_opts);
        const long long edges = static_cast<long long>(guess.h_prime.size()) + ilp.objective;
        best = std::max(best, edges);
        if (edges >= inst.l) {
            sol.witness = reconstruct(g, ctx, types, guess, model, ilp.values, inst.p);
            if (!verify_coloring(sol.witness, g) || sol.witness.colored_count() < edges) {
                throw ReconstructionFailure("reconstructed coloring failed verification");
            }
            sol.verdict = Verdict::Yes;
            return sol;
        }
    }
    sol.optimum = static_cast<int>(best);
    return sol;
}

}  // namespace mecs
