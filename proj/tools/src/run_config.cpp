#include "mecs_cli/run_config.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "mecs/errors.hpp"
#include "mecs/fpt.hpp"
#include "mecs/ilp.hpp"

namespace mecs::cli {

const char* to_string(Engine e) {
    switch (e) {
        case Engine::Oracle: return "oracle";
        case Engine::Ilp: return "ilp";
        case Engine::Rainbow: return "rainbow";
        case Engine::DivideColor: return "divide-color";
    }
    return "?";
}

std::optional<Engine> parse_engine(const std::string& name) {
    for (Engine e : {Engine::Oracle, Engine::Ilp, Engine::Rainbow, Engine::DivideColor}) {
        if (name == to_string(e)) return e;
    }
    return std::nullopt;
}

void RunConfig::validate() const {
    if (edge_cap <= 0 || vc_cap <= 0 || k_cap <= 0 || l_cap <= 0) {
        throw std::invalid_argument("caps must be positive");
    }
    if (!(rounds_factor > 0)) throw std::invalid_argument("rounds factor must be positive");
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Yes: return "YES";
        case Outcome::No: return "NO";
        case Outcome::Budget: return "BUDGET";
    }
    return "?";
}

Deadline deadline_from_env() {
    const char* raw = std::getenv("ECK_BUDGET_MS");
    if (raw == nullptr || *raw == '\0') return {};
    char* end = nullptr;
    long long ms = std::strtoll(raw, &end, 10);
    if (*end != '\0' || ms <= 0) throw std::invalid_argument("ECK_BUDGET_MS must be a positive integer");
    return Deadline::after(std::chrono::milliseconds(ms));
}

EngineRun run_engine(const RunConfig& cfg, const MecsInstance& inst, const Deadline& deadline, std::ostream* lp_dump) {
    EngineRun run;
    try {
        switch (cfg.engine) {
            case Engine::Oracle:
                run.solution = solve_exact(inst, {cfg.edge_cap, deadline});
                break;
            case Engine::Ilp: {
                IlpOptions opts;
                opts.vc_cap = cfg.vc_cap;
                opts.deadline = deadline;
                opts.dump = lp_dump;
                run.solution = solve_via_ilp(inst, opts);
                break;
            }
            case Engine::Rainbow:
                run.solution = solve_via_rainbow(inst, {cfg.k_cap, deadline});
                break;
            case Engine::DivideColor: {
                DivideColorOptions opts;
                opts.seed = cfg.seed;
                opts.rounds_factor = cfg.rounds_factor;
                opts.l_cap = cfg.l_cap;
                opts.deadline = deadline;
                DivideColorResult r = divide_and_color(inst, opts);
                run.solution = std::move(r.solution);
                if (!run.solution.yes() && r.budget_hit) {
                    run.outcome = Outcome::Budget;
                    run.note = "work budget exhausted";
                    return run;
                }
                break;
            }
        }
    } catch (const BudgetExceeded& e) {
        run.note = e.what();
        return run;
    } catch (const InstanceTooLarge& e) {
        run.note = e.what();
        return run;
    }
    run.outcome = run.solution.yes() ? Outcome::Yes : Outcome::No;
    return run;
}

}  // namespace mecs::cli
