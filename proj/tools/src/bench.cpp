#include "mecs_cli/bench.hpp"

#include <iomanip>

namespace mecs::cli {

void write_bench_row(std::ostream& out, const BenchRecord& r) {
    out << r.instance << ',' << r.engine << ',' << r.n << ',' << r.m << ',' << r.l << ',' << r.p << ','
        << to_string(r.verdict) << ',';
    if (r.optimum) {
        out << *r.optimum;
    } else {
        out << '-';
    }
    out << ',' << r.witness_size << ',' << r.seed << ',';
    if (r.wall_ms) {
        out << std::fixed << std::setprecision(3) << *r.wall_ms << std::defaultfloat;
    } else {
        out << '-';
    }
    out << '\n';
}

void write_kernel_row(std::ostream& out, const KernelRecord& r) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.l << ',' << r.p << ',' << r.modulator << ','
        << r.p_times_x << ',' << r.kernel_n << ',' << r.kernel_m << ',' << r.kernel_l << ',' << r.early << '\n';
}

}  // namespace mecs::cli
