#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mecs/deadline.hpp"
#include "mecs/graph.hpp"
#include "mecs/oracle.hpp"

namespace mecs {

MecsInstance pad_to_multiple(const MecsInstance& inst);

// SplitMix64 keyed by (seed, stream); split() derives independent child streams.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }
    bool bit() { return (next() >> 63) != 0; }
    CounterRng split(std::uint64_t stream) const { return CounterRng(mix(key_ ^ mix(stream + 0x632be59bd9b4e019ULL))); }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct DivideColorOptions {
    std::uint64_t seed = 0;
    double rounds_factor = 1.0;
    std::uint64_t work_budget = 20'000'000;  // base-case matching calls
    int l_cap = 24;
    Deadline deadline;
};

struct DivideColorResult {
    MecsSolution solution;
    std::uint64_t base_calls = 0;
    bool budget_hit = false;
    // Lower bound on the success probability on a YES instance for the rounds
    // actually available (1 - 1/(4l) with the full schedule).
    double confidence = 0.0;
};

DivideColorResult divide_and_color(const MecsInstance& inst, const DivideColorOptions& opts = {});

struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;  // per edge, positive
};

struct RainbowInstance {
    LabeledGraph lg;
    int k = 0;
};

RainbowInstance reduce_to_rainbow(const MecsInstance& inst);

struct RainbowOptions {
    int k_cap = 12;
    Deadline deadline;
};

std::optional<Matching> rainbow_matching_exact(const RainbowInstance& ri, const RainbowOptions& opts = {});

MecsSolution solve_via_rainbow(const MecsInstance& inst, const RainbowOptions& opts = {});

}  // namespace mecs
