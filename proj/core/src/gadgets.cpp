#include "mecs/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "mecs/oracle.hpp"

namespace mecs {

const std::array<std::pair<int, int>, 8>& module_wiring() {
    // Local 0..4 carry hanging edges a..e; 5 and 6 are the two hubs.
    static const std::array<std::pair<int, int>, 8> wiring{{
        {0, 2}, {0, 5}, {1, 3}, {1, 6}, {2, 6}, {3, 5}, {4, 5}, {4, 6},
    }};
    return wiring;
}

EdgeId GraphBuilder::add_edge(Vertex u, Vertex v) {
    edges_.push_back({std::min(u, v), std::max(u, v)});
    return static_cast<EdgeId>(edges_.size() - 1);
}

ModuleVertices GraphBuilder::add_module() {
    ModuleVertices m;
    for (auto& v : m.vertices) v = add_vertex();
    for (auto [a, b] : module_wiring()) add_edge(m.vertices[a], m.vertices[b]);
    for (int i = 0; i < 5; ++i) m.port[i] = m.vertices[i];
    return m;
}

RedGadget add_red_gadget(GraphBuilder& b, int degree) {
    if (degree < 1) throw std::invalid_argument("red gadget needs degree >= 1");
    const int cells = degree + 1;
    RedGadget g;
    for (int j = 0; j < 2 * cells; ++j) g.modules.push_back(b.add_module());
    auto first = [&](int j) -> const ModuleVertices& { return g.modules[2 * j]; };
    auto second = [&](int j) -> const ModuleVertices& { return g.modules[2 * j + 1]; };
    for (int j = 0; j < cells; ++j) {
        b.add_edge(first(j).port[kPortC], second(j).port[kPortC]);
        b.add_edge(first(j).port[kPortD], second(j).port[kPortD]);
    }
    for (int j = 0; j < cells; ++j) {
        int prev = (j + cells - 1) % cells;
        b.add_edge(second(j).port[kPortA], first(prev).port[kPortE]);
        b.add_edge(second(j).port[kPortB], second(prev).port[kPortE]);
    }
    for (int j = 0; j < cells; ++j) g.outputs.push_back({first(j).port[kPortA], first(j).port[kPortB]});
    return g;
}

BlueGadget add_blue_gadget(GraphBuilder& b, int degree, Vertex blue) {
    if (degree < 1) throw std::invalid_argument("blue gadget needs degree >= 1");
    BlueGadget g;
    const int len = 2 * degree + 1;
    for (int i = 0; i < len; ++i) g.cycle.push_back(b.add_vertex());
    for (int i = 0; i < len; ++i) b.add_edge(g.cycle[i], g.cycle[(i + 1) % len]);
    b.add_edge(blue, g.cycle[0]);
    for (int i = 1; i <= degree; ++i) {
        ModuleVertices m = b.add_module();
        b.add_edge(m.port[kPortC], g.cycle[2 * i - 1]);
        b.add_edge(m.port[kPortD], g.cycle[2 * i]);
        Vertex pendant = b.add_vertex();
        b.add_edge(m.port[kPortE], pendant);
        g.pendants.push_back(pendant);
        g.inputs.push_back({m.port[kPortA], m.port[kPortB]});
        g.modules.push_back(m);
    }
    return g;
}

Fragment build_module() {
    GraphBuilder b;
    ModuleVertices m = b.add_module();
    Fragment f;
    for (int i = 0; i < 5; ++i) f.hanging[i] = b.add_edge(m.port[i], b.add_vertex());
    f.graph = b.build();
    return f;
}

Fragment build_red_gadget(int degree, bool modified) {
    GraphBuilder b;
    RedGadget g = add_red_gadget(b, degree);
    Fragment f;
    if (modified) {
        f.pairs.push_back({b.add_edge(g.outputs[0][0], b.add_vertex()), b.add_edge(g.outputs[0][1], b.add_vertex())});
    } else {
        Vertex r = b.add_vertex();
        f.pairs.push_back({b.add_edge(g.outputs[0][0], r), b.add_edge(g.outputs[0][1], r)});
    }
    for (int j = 1; j <= degree; ++j) {
        f.pairs.push_back({b.add_edge(g.outputs[j][0], b.add_vertex()), b.add_edge(g.outputs[j][1], b.add_vertex())});
    }
    f.graph = b.build();
    return f;
}

Fragment build_blue_gadget(int degree) {
    GraphBuilder b;
    Vertex blue = b.add_vertex();
    BlueGadget g = add_blue_gadget(b, degree, blue);
    Fragment f;
    for (const auto& in : g.inputs) {
        f.pairs.push_back({b.add_edge(in[0], b.add_vertex()), b.add_edge(in[1], b.add_vertex())});
    }
    f.graph = b.build();
    return f;
}

void validate_rbds(const RbdsInstance& inst) {
    if (inst.red < 0 || inst.blue < 0 || inst.k < 0) throw std::invalid_argument("negative RBDS size");
    std::set<std::pair<int, int>> seen;
    std::vector<int> rdeg(inst.red, 0);
    std::vector<int> bdeg(inst.blue, 0);
    for (auto [r, b] : inst.edges) {
        if (r < 0 || r >= inst.red || b < 0 || b >= inst.blue) throw std::invalid_argument("RBDS edge out of range");
        if (!seen.emplace(r, b).second) throw std::invalid_argument("duplicate RBDS edge");
        ++rdeg[r];
        ++bdeg[b];
    }
    for (int d : rdeg) {
        if (d == 0) throw std::invalid_argument("isolated red vertex");
    }
    for (int d : bdeg) {
        if (d == 0) throw std::invalid_argument("isolated blue vertex");
    }
}

bool rbds_brute_force(const RbdsInstance& inst) {
    validate_rbds(inst);
    if (inst.red > 24) throw InstanceTooLarge("RBDS brute force supports at most 24 red vertices");
    std::vector<std::uint32_t> dominated_by(inst.blue, 0);
    for (auto [r, b] : inst.edges) dominated_by[b] |= std::uint32_t{1} << r;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << inst.red); ++s) {
        if (std::popcount(s) > inst.k) continue;
        bool ok = std::all_of(dominated_by.begin(), dominated_by.end(), [&](std::uint32_t d) { return (d & s) != 0; });
        if (ok) return true;
    }
    return false;
}

GadgetLayout reduce_rbds(const RbdsInstance& inst) {
    validate_rbds(inst);
    GraphBuilder b;
    for (int i = 0; i < inst.red + inst.blue; ++i) b.add_vertex();
    std::vector<int> rdeg(inst.red, 0);
    std::vector<int> bdeg(inst.blue, 0);
    for (auto [r, bl] : inst.edges) {
        ++rdeg[r];
        ++bdeg[bl];
    }
    GadgetLayout layout;
    for (int r = 0; r < inst.red; ++r) {
        RedLayout rl;
        rl.r = r;
        rl.gadget = add_red_gadget(b, rdeg[r]);
        rl.r_ports = rl.gadget.outputs[0];
        b.add_edge(r, rl.r_ports[0]);
        b.add_edge(r, rl.r_ports[1]);
        layout.red.push_back(std::move(rl));
    }
    for (int i = 0; i < inst.blue; ++i) {
        BlueLayout bl;
        bl.b = inst.red + i;
        bl.gadget = add_blue_gadget(b, bdeg[i], bl.b);
        layout.blue.push_back(std::move(bl));
    }
    std::vector<int> next_output(inst.red, 1);
    std::vector<int> next_input(inst.blue, 0);
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        auto [r, bi] = inst.edges[e];
        PairLink link;
        link.rbds_edge = static_cast<int>(e);
        link.red = r;
        link.output = next_output[r]++;
        link.blue = bi;
        link.input = next_input[bi]++;
        const PortPair& out = layout.red[r].gadget.outputs[link.output];
        const PortPair& in = layout.blue[bi].gadget.inputs[link.input];
        link.edges = {b.add_edge(out[0], in[0]), b.add_edge(out[1], in[1])};
        layout.links.push_back(link);
    }
    for (const auto& rl : layout.red) {
        for (const auto& m : rl.gadget.modules) layout.internal.insert(layout.internal.end(), m.vertices.begin(), m.vertices.end());
    }
    for (const auto& bl : layout.blue) {
        for (const auto& m : bl.gadget.modules) layout.internal.insert(layout.internal.end(), m.vertices.begin(), m.vertices.end());
        layout.internal.insert(layout.internal.end(), bl.gadget.cycle.begin(), bl.gadget.cycle.end());
    }
    std::sort(layout.internal.begin(), layout.internal.end());
    layout.mecs.graph = b.build();
    layout.mecs.p = 3;
    layout.mecs.l = std::max(0, layout.mecs.graph.edge_count() - inst.k);
    return layout;
}

Graph modify_at(const GadgetLayout& layout, const std::vector<int>& red_subset) {
    const Graph& g = layout.mecs.graph;
    std::vector<Edge> edges = g.edges();
    int n = g.vertex_count();
    for (int r : red_subset) {
        const RedLayout& rl = layout.red.at(r);
        EdgeId e = *g.find_edge(rl.r, rl.r_ports[1]);
        edges[e] = {rl.r_ports[1], n++};
    }
    return Graph(n, std::move(edges));
}

namespace {

bool all_distinct(int x, int y, int z) { return x != y && y != z && x != z; }

bool module_relation(const std::array<int, 5>& t) {
    return (t[0] == t[1] && all_distinct(t[2], t[3], t[4])) || (t[2] == t[3] && all_distinct(t[0], t[1], t[4]));
}

ClaimResult module_forcing() {
    ClaimResult r{1, "module forcing", true, 0, ""};
    Fragment f = build_module();
    r.colorings = enumerate_edge_colorings(f.graph, 3, {}, [&](const std::vector<int>& c) {
        std::array<int, 5> t{};
        for (int i = 0; i < 5; ++i) t[i] = c[f.hanging[i]];
        if (!module_relation(t)) {
            r.pass = false;
            r.detail = "hanging colors violate the module relation";
            return false;
        }
        return true;
    });
    if (r.colorings == 0) {
        r.pass = false;
        r.detail = "module has no 3-edge-coloring";
    }
    return r;
}

ClaimResult module_extension() {
    ClaimResult r{2, "module extension", true, 0, ""};
    Fragment f = build_module();
    int tuples = 0;
    for (int code = 0; code < 243; ++code) {
        std::array<int, 5> t{};
        for (int i = 0, x = code; i < 5; ++i, x /= 3) t[i] = x % 3 + 1;
        if (!module_relation(t)) continue;
        ++tuples;
        std::vector<int> fixed(f.graph.edge_count(), 0);
        for (int i = 0; i < 5; ++i) fixed[f.hanging[i]] = t[i];
        auto found = enumerate_edge_colorings(f.graph, 3, fixed, [](const std::vector<int>&) { return false; });
        r.colorings += found;
        if (found == 0) {
            r.pass = false;
            r.detail = "an admissible hanging assignment does not extend";
            return r;
        }
    }
    r.detail = std::to_string(tuples) + " admissible hanging assignments";
    return r;
}

ClaimResult red_outputs_distinct(int degree) {
    ClaimResult r{3, "red gadget outputs distinct", true, 0, ""};
    Fragment f = build_red_gadget(degree, false);
    r.colorings = enumerate_edge_colorings(f.graph, 3, {}, [&](const std::vector<int>& c) {
        for (const auto& pr : f.pairs) {
            if (c[pr[0]] == c[pr[1]]) {
                r.pass = false;
                r.detail = "an output pair shares a color";
                return false;
            }
        }
        return true;
    });
    if (r.colorings == 0) {
        r.pass = false;
        r.detail = "red gadget has no 3-edge-coloring";
    }
    r.detail = r.pass ? "degree " + std::to_string(degree) : r.detail;
    return r;
}

ClaimResult modified_red_same(int degree) {
    ClaimResult r{4, "modified red gadget admits equal outputs", false, 0, ""};
    Fragment f = build_red_gadget(degree, true);
    r.colorings = enumerate_edge_colorings(f.graph, 3, {}, [&](const std::vector<int>& c) {
        bool all_same = std::all_of(f.pairs.begin(), f.pairs.end(), [&](const auto& pr) { return c[pr[0]] == c[pr[1]]; });
        if (all_same) r.pass = true;
        return !all_same;
    });
    r.detail = r.pass ? "degree " + std::to_string(degree) : "no coloring with every output pair equal";
    return r;
}

ClaimResult blue_input_forcing(int degree) {
    ClaimResult r{5, "blue gadget input forcing", true, 0, ""};
    Fragment f = build_blue_gadget(degree);
    r.colorings = enumerate_edge_colorings(f.graph, 3, {}, [&](const std::vector<int>& c) {
        bool some_same = std::any_of(f.pairs.begin(), f.pairs.end(), [&](const auto& pr) { return c[pr[0]] == c[pr[1]]; });
        if (!some_same) {
            r.pass = false;
            r.detail = "every input pair is split";
            return false;
        }
        return true;
    });
    if (r.colorings == 0) {
        r.pass = false;
        r.detail = "blue gadget has no 3-edge-coloring";
    }
    r.detail = r.pass ? "degree " + std::to_string(degree) : r.detail;
    return r;
}

ClaimResult blue_extension(int degree) {
    ClaimResult r{6, "blue gadget extension", true, 0, ""};
    Fragment f = build_blue_gadget(degree);
    const int inputs = 2 * degree;
    int total = 1;
    for (int i = 0; i < inputs; ++i) total *= 3;
    int checked = 0;
    for (int code = 0; code < total; ++code) {
        std::vector<int> colors(inputs);
        for (int i = 0, x = code; i < inputs; ++i, x /= 3) colors[i] = x % 3 + 1;
        bool some_same = false;
        for (int j = 0; j < degree; ++j) some_same = some_same || colors[2 * j] == colors[2 * j + 1];
        if (!some_same) continue;
        ++checked;
        std::vector<int> fixed(f.graph.edge_count(), 0);
        for (int j = 0; j < degree; ++j) {
            fixed[f.pairs[j][0]] = colors[2 * j];
            fixed[f.pairs[j][1]] = colors[2 * j + 1];
        }
        auto found = enumerate_edge_colorings(f.graph, 3, fixed, [](const std::vector<int>&) { return false; });
        r.colorings += found;
        if (found == 0) {
            r.pass = false;
            r.detail = "an admissible input coloring does not extend";
            return r;
        }
    }
    r.detail = "degree " + std::to_string(degree) + ", " + std::to_string(checked) + " input colorings";
    return r;
}

ClaimResult merge(std::vector<ClaimResult> parts) {
    ClaimResult out = parts.front();
    out.colorings = 0;
    out.detail.clear();
    for (const auto& p : parts) {
        out.pass = out.pass && p.pass;
        out.colorings += p.colorings;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += p.detail;
    }
    return out;
}

}  // namespace

std::vector<ClaimResult> verify_claims() {
    return {
        module_forcing(),
        module_extension(),
        red_outputs_distinct(1),
        modified_red_same(1),
        merge({blue_input_forcing(1), blue_input_forcing(2)}),
        merge({blue_extension(1), blue_extension(2)}),
    };
}

}  // namespace mecs
