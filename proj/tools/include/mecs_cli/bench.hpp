#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "mecs_cli/run_config.hpp"

namespace mecs::cli {

struct BenchRecord {
    std::string instance;
    std::string engine;
    int n = 0;
    int m = 0;
    int l = 0;
    int p = 1;
    Outcome verdict = Outcome::Budget;
    std::optional<int> optimum;
    int witness_size = 0;
    std::uint64_t seed = 0;
    std::optional<double> wall_ms;
};

inline constexpr const char* kBenchHeader = "instance,engine,n,m,l,p,verdict,optimum,witness_size,seed,wall_ms";

// Empty optionals print as "-".
void write_bench_row(std::ostream& out, const BenchRecord& r);

struct KernelRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    int l = 0;
    int p = 1;
    int modulator = 0;
    int p_times_x = 0;
    int kernel_n = 0;
    int kernel_m = 0;
    int kernel_l = 0;
    std::string early;  // "yes", "no" or "-"
};

inline constexpr const char* kKernelHeader = "instance,n,m,l,p,modulator,p_times_x,kernel_n,kernel_m,kernel_l,early";

void write_kernel_row(std::ostream& out, const KernelRecord& r);

}  // namespace mecs::cli
