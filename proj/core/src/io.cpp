#include "mecs/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <set>
#include <stdexcept>

#include "mecs/errors.hpp"

namespace mecs {

namespace {

// Yields non-blank, non-comment lines split into integer tokens.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<long long>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) {
                std::size_t used = 0;
                long long value = 0;
                try {
                    value = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size()) throw ParseError(line_no_, "expected an integer, got '" + tok + "'");
                tokens.push_back(value);
            }
            return true;
        }
        ++line_no_;
        return false;
    }

    int line() const { return line_no_; }

    void expect(std::vector<long long>& tokens, std::size_t count, const std::string& what) {
        if (!next(tokens)) throw ParseError(line_no_, "unexpected end of input, expected " + what);
        if (tokens.size() != count) {
            throw ParseError(line_no_, "expected " + what + " (" + std::to_string(count) + " integers)");
        }
    }

    void expect_end() {
        std::vector<long long> tokens;
        if (next(tokens)) throw ParseError(line_no_, "unexpected trailing content");
    }

private:
    std::istream& in_;
    int line_no_ = 0;
};

int checked_int(long long v, int line, const std::string& what) {
    if (v < 0 || v > 100'000'000) throw ParseError(line, what + " out of range");
    return static_cast<int>(v);
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader r(in);
    std::vector<long long> t;
    r.expect(t, 2, "header 'n m'");
    int n = checked_int(t[0], r.line(), "vertex count");
    int m = checked_int(t[1], r.line(), "edge count");
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        r.expect(t, 2, "edge 'u v'");
        if (t[0] < 0 || t[1] < 0 || t[0] >= n || t[1] >= n) throw ParseError(r.line(), "endpoint out of range");
        if (t[0] == t[1]) throw ParseError(r.line(), "self-loop");
        if (t[0] > t[1]) throw ParseError(r.line(), "edge endpoints must satisfy u < v");
        if (!seen.emplace(static_cast<int>(t[0]), static_cast<int>(t[1])).second) {
            throw ParseError(r.line(), "duplicate edge");
        }
        edges.push_back({static_cast<int>(t[0]), static_cast<int>(t[1])});
    }
    r.expect_end();
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    auto in = open(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (c.is_colored(e)) out << g.edge(e).u << " " << g.edge(e).v << " " << c.color(e) << "\n";
    }
}

EdgeColoring read_coloring(std::istream& in, const Graph& g, int p) {
    LineReader r(in);
    EdgeColoring c(g.edge_count(), p);
    std::vector<long long> t;
    while (r.next(t)) {
        if (t.size() != 3) throw ParseError(r.line(), "expected 'u v c'");
        auto e = g.find_edge(static_cast<int>(std::min(t[0], t[1])), static_cast<int>(std::max(t[0], t[1])));
        if (!e) throw ParseError(r.line(), "not an edge of the graph");
        if (c.is_colored(*e)) throw ParseError(r.line(), "edge colored twice");
        if (t[2] < 1 || t[2] > p) throw ParseError(r.line(), "color outside 1.." + std::to_string(p));
        c.assign(*e, static_cast<int>(t[2]));
    }
    return c;
}

void write_labeled_graph(std::ostream& out, const LabeledGraph& lg) {
    out << lg.graph.vertex_count() << " " << lg.graph.edge_count() << "\n";
    for (EdgeId e = 0; e < lg.graph.edge_count(); ++e) {
        out << lg.graph.edge(e).u << " " << lg.graph.edge(e).v << " " << lg.labels[e] << "\n";
    }
}

LabeledGraph read_labeled_graph(std::istream& in) {
    LineReader r(in);
    std::vector<long long> t;
    r.expect(t, 2, "header 'n m'");
    int n = checked_int(t[0], r.line(), "vertex count");
    int m = checked_int(t[1], r.line(), "edge count");
    std::vector<Edge> edges;
    std::vector<int> labels;
    for (int i = 0; i < m; ++i) {
        r.expect(t, 3, "edge 'u v label'");
        if (t[0] < 0 || t[1] < 0 || t[0] >= n || t[1] >= n || t[0] == t[1]) {
            throw ParseError(r.line(), "invalid endpoints");
        }
        if (t[2] < 1) throw ParseError(r.line(), "labels must be positive");
        edges.push_back({static_cast<int>(t[0]), static_cast<int>(t[1])});
        labels.push_back(checked_int(t[2], r.line(), "label"));
    }
    r.expect_end();
    try {
        return {Graph(n, std::move(edges)), std::move(labels)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(r.line(), e.what());
    }
}

RbdsInstance read_rbds(std::istream& in) {
    LineReader r(in);
    std::vector<long long> t;
    r.expect(t, 4, "header '|R| |B| m k'");
    RbdsInstance inst;
    inst.red = checked_int(t[0], r.line(), "|R|");
    inst.blue = checked_int(t[1], r.line(), "|B|");
    int m = checked_int(t[2], r.line(), "edge count");
    inst.k = checked_int(t[3], r.line(), "k");
    for (int i = 0; i < m; ++i) {
        r.expect(t, 2, "edge 'r b'");
        if (t[0] < 0 || t[0] >= inst.red || t[1] < 0 || t[1] >= inst.blue) {
            throw ParseError(r.line(), "RBDS endpoint out of range");
        }
        inst.edges.emplace_back(static_cast<int>(t[0]), static_cast<int>(t[1]));
    }
    r.expect_end();
    try {
        validate_rbds(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(r.line(), e.what());
    }
    return inst;
}

RbdsInstance read_rbds_file(const std::string& path) {
    auto in = open(path);
    return read_rbds(in);
}

void write_rbds(std::ostream& out, const RbdsInstance& inst) {
    out << inst.red << " " << inst.blue << " " << inst.edges.size() << " " << inst.k << "\n";
    for (auto [r, b] : inst.edges) out << r << " " << b << "\n";
}

}  // namespace mecs
