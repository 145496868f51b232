#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mecs/deadline.hpp"
#include "mecs/oracle.hpp"

namespace mecs::cli {

enum class Engine { Oracle, Ilp, Rainbow, DivideColor };

const char* to_string(Engine e);
std::optional<Engine> parse_engine(const std::string& name);

struct RunConfig {
    Engine engine = Engine::Oracle;
    int edge_cap = 24;
    int vc_cap = 4;
    int k_cap = 12;
    int l_cap = 24;
    std::uint64_t seed = 0;
    double rounds_factor = 1.0;
    std::string out_path;
    std::string lp_path;

    // Throws std::invalid_argument on a non-positive cap or rounds factor.
    void validate() const;
};

enum class Outcome { Yes, No, Budget };

const char* to_string(Outcome o);

struct EngineRun {
    Outcome outcome = Outcome::Budget;
    MecsSolution solution;
    std::string note;  // reason for Budget
};

// Reads ECK_BUDGET_MS; unset or empty means unlimited.
Deadline deadline_from_env();

// Budget-type failures (caps, deadlines) become Outcome::Budget; other errors propagate.
EngineRun run_engine(const RunConfig& cfg, const MecsInstance& inst, const Deadline& deadline,
                     std::ostream* lp_dump = nullptr);

}  // namespace mecs::cli
