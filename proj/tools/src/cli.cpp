#include "mecs_cli/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "mecs/errors.hpp"
#include "mecs/fpt.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/io.hpp"
#include "mecs/kernel.hpp"
#include "mecs/matching.hpp"
#include "mecs_cli/bench.hpp"
#include "mecs_cli/generators.hpp"
#include "mecs_cli/run_config.hpp"
#include "mecs_cli/serialize.hpp"

namespace mecs::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

const std::vector<std::string> kEngineNames = {"oracle", "ilp", "rainbow", "divide-color"};

void add_caps(CLI::App* app, RunConfig& cfg) {
    app->add_option("--edge-cap", cfg.edge_cap, "Largest edge count for the exact oracle")->capture_default_str();
    app->add_option("--vc-cap", cfg.vc_cap, "Largest vertex cover for the ILP engine")->capture_default_str();
    app->add_option("--k-cap", cfg.k_cap, "Largest rainbow target size")->capture_default_str();
    app->add_option("--l-cap", cfg.l_cap, "Largest l for divide-and-color")->capture_default_str();
    app->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app->add_option("--rounds-factor", cfg.rounds_factor, "Scale of the divide-and-color rounds")->capture_default_str();
}

// Writes to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    body(f);
    if (!f) throw std::runtime_error("failed writing " + path);
}

std::string witness_error(const MecsInstance& inst, const EdgeColoring& c) {
    ColoringCheck check = verify_coloring(c, inst.graph);
    if (!check) return check.message;
    if (c.colored_count() < inst.l) return "witness has fewer than l edges";
    return {};
}

struct SolveArgs {
    RunConfig cfg;
    std::string engine = "oracle";
    std::string graph;
    int l = 0;
    int p = 1;
};

int cmd_solve(SolveArgs& a, std::ostream& out) {
    a.cfg.engine = *parse_engine(a.engine);
    a.cfg.validate();
    MecsInstance inst{read_graph_file(a.graph), a.l, a.p};
    validate_instance(inst);
    std::ofstream lp;
    if (!a.cfg.lp_path.empty()) {
        lp.open(a.cfg.lp_path);
        if (!lp) throw std::runtime_error("cannot write " + a.cfg.lp_path);
    }
    EngineRun run = run_engine(a.cfg, inst, deadline_from_env(), lp.is_open() ? &lp : nullptr);
    if (run.outcome == Outcome::Yes) {
        std::string bad = witness_error(inst, run.solution.witness);
        if (!bad.empty()) throw std::logic_error("engine produced an invalid witness: " + bad);
    }
    out << to_string(run.outcome) << "\n";
    out << "# engine " << to_string(a.cfg.engine) << "\n";
    if (run.solution.optimum) out << "# optimum " << *run.solution.optimum << "\n";
    if (run.outcome == Outcome::Budget) {
        out << "# " << run.note << "\n";
        return kExitError;
    }
    if (run.outcome == Outcome::No) return kExitNo;
    out << "# colored " << run.solution.witness.colored_count() << "\n";
    if (a.cfg.out_path.empty()) {
        write_coloring(out, inst.graph, run.solution.witness);
    } else {
        emit(a.cfg.out_path, out, [&](std::ostream& o) { write_coloring(o, inst.graph, run.solution.witness); });
    }
    return kExitYes;
}

struct KernelArgs {
    std::string graph;
    int l = 0;
    int p = 1;
    std::string trace_path;
    std::string out_path;
};

int cmd_kernelize(const KernelArgs& a, std::ostream& out) {
    MecsInstance inst{read_graph_file(a.graph), a.l, a.p};
    KernelTrace trace = kernelize(inst);
    emit(a.out_path, out, [&](std::ostream& o) {
        o << "# l=" << trace.final_instance.l << " p=" << trace.final_instance.p << "\n";
        write_graph(o, trace.final_instance.graph);
    });
    if (!a.trace_path.empty()) emit(a.trace_path, out, [&](std::ostream& o) { o << trace_json(trace); });
    return kExitYes;
}

int cmd_reduce_rainbow(const KernelArgs& a, std::ostream& out) {
    MecsInstance inst{read_graph_file(a.graph), a.l, a.p};
    RainbowInstance ri = reduce_to_rainbow(inst);
    emit(a.out_path, out, [&](std::ostream& o) {
        o << "# k=" << ri.k << "\n";
        write_labeled_graph(o, ri.lg);
    });
    return kExitYes;
}

struct GadgetArgs {
    std::string rbds_path;
    std::string out_path;
    std::string layout_path;
    std::string rbds_out;
    int red = 3;
    int blue = 3;
    int max_degree = 2;
    int k = 1;
    std::uint64_t seed = 0;
};

int cmd_gen_gadget(const GadgetArgs& a, std::ostream& out) {
    RbdsInstance rbds;
    if (!a.rbds_path.empty()) {
        rbds = read_rbds_file(a.rbds_path);
    } else {
        CounterRng rng(a.seed);
        rbds = random_rbds(a.red, a.blue, a.max_degree, a.k, rng);
    }
    if (!a.rbds_out.empty()) emit(a.rbds_out, out, [&](std::ostream& o) { write_rbds(o, rbds); });
    GadgetLayout layout = reduce_rbds(rbds);
    emit(a.out_path, out, [&](std::ostream& o) {
        o << "# l=" << layout.mecs.l << " p=" << layout.mecs.p << "\n";
        write_graph(o, layout.mecs.graph);
    });
    if (!a.layout_path.empty()) emit(a.layout_path, out, [&](std::ostream& o) { o << layout_json(layout); });
    return kExitYes;
}

struct CrossArgs {
    RunConfig cfg;
    std::string dir;
};

struct ManifestEntry {
    std::string file;
    int l = 0;
    int p = 1;
};

std::vector<ManifestEntry> read_manifest(const fs::path& dir) {
    std::vector<ManifestEntry> entries;
    std::ifstream in(dir / "manifest.txt");
    if (!in) return entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        ManifestEntry e;
        std::string extra;
        if (!(ss >> e.file >> e.l >> e.p) || (ss >> extra)) {
            throw ParseError(line_no, "manifest lines must read 'file l p'");
        }
        entries.push_back(e);
    }
    return entries;
}

int cmd_cross_validate(CrossArgs& a, std::ostream& out) {
    a.cfg.validate();
    const fs::path dir(a.dir);
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + a.dir);
    int triples = 0;
    int disagreements = 0;
    int misses = 0;
    int budget = 0;
    for (const ManifestEntry& e : read_manifest(dir)) {
        ++triples;
        MecsInstance inst{read_graph_file((dir / e.file).string()), e.l, e.p};
        validate_instance(inst);
        out << e.file << " l=" << e.l << " p=" << e.p;
        std::optional<Outcome> exact;
        bool disagree = false;
        auto note_exact = [&](Outcome o) {
            if (o == Outcome::Budget) {
                ++budget;
                return;
            }
            if (exact && *exact != o) disagree = true;
            if (!exact) exact = o;
        };
        std::optional<Outcome> randomized;
        for (Engine engine : {Engine::Oracle, Engine::Ilp, Engine::Rainbow, Engine::DivideColor}) {
            RunConfig cfg = a.cfg;
            cfg.engine = engine;
            EngineRun run = run_engine(cfg, inst, deadline_from_env());
            if (run.outcome == Outcome::Yes && !witness_error(inst, run.solution.witness).empty()) {
                disagree = true;
                out << " " << to_string(engine) << "=INVALID";
                continue;
            }
            out << " " << to_string(engine) << "=" << to_string(run.outcome);
            if (engine == Engine::DivideColor) {
                randomized = run.outcome;
            } else {
                note_exact(run.outcome);
            }
        }
        // Kernel first, then the exact oracle on the reduced instance.
        KernelTrace trace = kernelize(inst);
        RunConfig kcfg = a.cfg;
        kcfg.engine = Engine::Oracle;
        EngineRun krun = run_engine(kcfg, trace.final_instance, deadline_from_env());
        out << " kernel=" << to_string(krun.outcome);
        note_exact(krun.outcome);
        if (randomized && exact) {
            if (*randomized == Outcome::Yes && *exact == Outcome::No) disagree = true;
            if (*randomized != Outcome::Yes && *exact == Outcome::Yes) {
                ++misses;
                out << " one-sided-miss";
            }
        }
        if (disagree) {
            ++disagreements;
            out << " DISAGREE";
        }
        out << "\n";
    }
    out << "triples " << triples << " disagreements " << disagreements << " one-sided-misses " << misses
        << " budget " << budget << "\n";
    return disagreements == 0 ? kExitYes : kExitNo;
}

struct BenchArgs {
    RunConfig cfg;
    std::string family = "random";
    std::string engines = "oracle,ilp,rainbow,divide-color";
    int count = 5;
    int n = 6;
    int m = 9;
    int p = 2;
    int l_max = 8;
    bool timing = false;
    bool kernel = false;
};

struct BenchInstance {
    std::string id;
    MecsInstance inst;
    bool fixed_l = false;
};

std::vector<BenchInstance> bench_instances(const BenchArgs& a) {
    std::vector<BenchInstance> out;
    CounterRng rng(a.cfg.seed);
    for (int i = 0; i < a.count; ++i) {
        std::string id = a.family + "-" + std::to_string(i);
        if (a.family == "random") {
            CounterRng child = rng.split(static_cast<std::uint64_t>(i));
            out.push_back({id, {random_graph(a.n, a.m, child), 0, a.p}, false});
        } else if (a.family == "star") {
            out.push_back({id, {star_graph(i + 1), 0, a.p}, false});
        } else if (a.family == "cycle") {
            out.push_back({id, {cycle_graph(i + 3), 0, a.p}, false});
        } else {
            CounterRng child = rng.split(static_cast<std::uint64_t>(i));
            RbdsInstance rbds = random_rbds(2, 2, 2, 1, child);
            out.push_back({id, reduce_rbds(rbds).mecs, true});
        }
    }
    return out;
}

std::vector<Engine> parse_engine_list(const std::string& list) {
    std::vector<Engine> engines;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto e = parse_engine(name);
        if (!e) throw std::invalid_argument("unknown engine: " + name);
        engines.push_back(*e);
    }
    return engines;
}

int cmd_bench(BenchArgs& a, std::ostream& out) {
    a.cfg.validate();
    if (a.count < 0 || a.l_max < 0) throw std::invalid_argument("count and l-max must be non-negative");
    const std::vector<Engine> engines = parse_engine_list(a.engines);
    const std::vector<BenchInstance> instances = bench_instances(a);
    emit(a.cfg.out_path, out, [&](std::ostream& o) {
        o << (a.kernel ? kKernelHeader : kBenchHeader) << "\n";
        for (const BenchInstance& bi : instances) {
            std::vector<int> ls;
            if (bi.fixed_l) {
                ls.push_back(bi.inst.l);
            } else {
                for (int l = 1; l <= std::min(bi.inst.graph.edge_count(), a.l_max); ++l) ls.push_back(l);
            }
            for (int l : ls) {
                MecsInstance inst{bi.inst.graph, l, bi.inst.p};
                if (a.kernel) {
                    KernelTrace trace = kernelize(inst);
                    KernelRecord r;
                    r.instance = bi.id;
                    r.n = inst.graph.vertex_count();
                    r.m = inst.graph.edge_count();
                    r.l = l;
                    r.p = inst.p;
                    r.modulator = static_cast<int>(trace.modulator.size());
                    r.p_times_x = inst.p * r.modulator;
                    r.kernel_n = trace.final_instance.graph.vertex_count();
                    r.kernel_m = trace.final_instance.graph.edge_count();
                    r.kernel_l = trace.final_instance.l;
                    r.early = trace.early_yes ? "yes" : trace.early_no ? "no" : "-";
                    write_kernel_row(o, r);
                    continue;
                }
                for (Engine engine : engines) {
                    RunConfig cfg = a.cfg;
                    cfg.engine = engine;
                    auto start = std::chrono::steady_clock::now();
                    EngineRun run = run_engine(cfg, inst, deadline_from_env());
                    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                    BenchRecord r;
                    r.instance = bi.id;
                    r.engine = to_string(engine);
                    r.n = inst.graph.vertex_count();
                    r.m = inst.graph.edge_count();
                    r.l = l;
                    r.p = inst.p;
                    r.verdict = run.outcome;
                    r.optimum = run.solution.optimum;
                    r.witness_size = run.outcome == Outcome::Yes ? run.solution.witness.colored_count() : 0;
                    r.seed = a.cfg.seed;
                    if (a.timing) r.wall_ms = ms;
                    write_bench_row(o, r);
                }
            }
        }
    });
    return kExitYes;
}

struct VerifyArgs {
    std::string graph;
    std::string coloring;
    int p = 1;
    int l = 0;
    bool claims = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.claims) {
        bool all = true;
        for (const ClaimResult& c : verify_claims()) {
            out << "claim " << c.id << " " << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (colorings "
                << c.colorings;
            if (!c.detail.empty()) out << "; " << c.detail;
            out << ")\n";
            all = all && c.pass;
        }
        return all ? kExitYes : kExitNo;
    }
    if (a.graph.empty() || a.coloring.empty()) throw std::invalid_argument("verify needs a graph and a coloring");
    Graph g = read_graph_file(a.graph);
    std::ifstream in(a.coloring);
    if (!in) throw std::runtime_error("cannot open " + a.coloring);
    EdgeColoring c = read_coloring(in, g, a.p);
    ColoringCheck check = verify_coloring(c, g);
    if (!check) {
        out << "INVALID " << check.message << "\n";
        return kExitNo;
    }
    if (c.colored_count() < a.l) {
        out << "INVALID " << c.colored_count() << " colored edges, fewer than l=" << a.l << "\n";
        return kExitNo;
    }
    out << "VALID " << c.colored_count() << " colored edges\n";
    return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum edge colorable subgraph toolkit", "mecs"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Decide (G, l, p) with one engine");
    s->add_option("--in,graph", solve.graph, "Graph file")->required();
    s->add_option("--engine", solve.engine, "Engine")->check(CLI::IsMember(kEngineNames))->capture_default_str();
    s->add_option("--l", solve.l, "Required number of edges")->required();
    s->add_option("--p", solve.p, "Number of colors")->required();
    s->add_option("--out", solve.cfg.out_path, "Write the coloring here instead of stdout");
    s->add_option("--dump-lp", solve.cfg.lp_path, "Write the integer programs (ilp engine)");
    add_caps(s, solve.cfg);

    KernelArgs kern;
    auto* k = app.add_subcommand("kernelize", "Apply the reduction rules and print the kernel");
    k->add_option("--in,graph", kern.graph, "Graph file")->required();
    k->add_option("--l", kern.l, "Required number of edges")->required();
    k->add_option("--p", kern.p, "Number of colors")->required();
    k->add_option("--trace", kern.trace_path, "Write the rule trace as JSON");
    k->add_option("--out", kern.out_path, "Write the kernel here instead of stdout");

    KernelArgs rain;
    auto* r = app.add_subcommand("reduce-rainbow", "Print the rainbow matching instance");
    r->add_option("--in,graph", rain.graph, "Graph file")->required();
    r->add_option("--l", rain.l, "Required number of edges")->required();
    r->add_option("--p", rain.p, "Number of colors")->required();
    r->add_option("--out", rain.out_path, "Write the labeled graph here instead of stdout");

    GadgetArgs gad;
    auto* gg = app.add_subcommand("gen-gadget", "Build the p = 3 instance for a red-blue dominating set instance");
    gg->add_option("--rbds", gad.rbds_path, "RBDS file; omitted means a random instance");
    gg->add_option("--out", gad.out_path, "Write the graph here instead of stdout");
    gg->add_option("--layout", gad.layout_path, "Write the gadget layout as JSON");
    gg->add_option("--rbds-out", gad.rbds_out, "Write the (possibly generated) RBDS instance");
    gg->add_option("--red", gad.red, "Random instance: red vertices")->capture_default_str();
    gg->add_option("--blue", gad.blue, "Random instance: blue vertices")->capture_default_str();
    gg->add_option("--max-degree", gad.max_degree, "Random instance: red neighbors per blue vertex")->capture_default_str();
    gg->add_option("--k", gad.k, "Random instance: budget")->capture_default_str();
    gg->add_option("--seed", gad.seed, "Random seed")->capture_default_str();

    CrossArgs cross;
    auto* c = app.add_subcommand("cross-validate", "Run every engine on a corpus and compare verdicts");
    c->add_option("dir", cross.dir, "Corpus directory holding manifest.txt")->required();
    add_caps(c, cross.cfg);

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Emit CSV records for generated instances");
    b->add_option("--family", bench.family, "Instance family")
        ->check(CLI::IsMember({"random", "star", "cycle", "gadget"}))
        ->capture_default_str();
    b->add_option("--engines", bench.engines, "Comma-separated engines")->capture_default_str();
    b->add_option("--count", bench.count, "Instances")->capture_default_str();
    b->add_option("--n", bench.n, "Random family: vertices")->capture_default_str();
    b->add_option("--m", bench.m, "Random family: edges")->capture_default_str();
    b->add_option("--p", bench.p, "Colors")->capture_default_str();
    b->add_option("--l-max", bench.l_max, "Largest l in the sweep")->capture_default_str();
    b->add_flag("--timing", bench.timing, "Fill the wall_ms column");
    b->add_flag("--kernel", bench.kernel, "Emit kernel sizes instead of engine runs");
    b->add_option("--out", bench.cfg.out_path, "Write the CSV here instead of stdout");
    add_caps(b, bench.cfg);

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Check a coloring file, or the gadget claims");
    v->add_option("graph", ver.graph, "Graph file");
    v->add_option("coloring", ver.coloring, "Coloring file");
    v->add_option("--p", ver.p, "Number of colors")->capture_default_str();
    v->add_option("--l", ver.l, "Required number of colored edges")->capture_default_str();
    v->add_flag("--claims", ver.claims, "Run the exhaustive gadget claims");

    std::vector<std::string> argv_store;
    argv_store.push_back("mecs");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*s) return cmd_solve(solve, out);
        if (*k) return cmd_kernelize(kern, out);
        if (*r) return cmd_reduce_rainbow(rain, out);
        if (*gg) return cmd_gen_gadget(gad, out);
        if (*c) return cmd_cross_validate(cross, out);
        if (*b) return cmd_bench(bench, out);
        if (*v) return cmd_verify(ver, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace mecs::cli
