#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mecs/deadline.hpp"
#include "mecs/graph.hpp"
#include "mecs/oracle.hpp"

namespace mecs {

using VertexMask = std::uint32_t;  // subset of the cover, bit i = i-th cover vertex

// Type of a matching between the cover X and W = V \ X: the matched cover
// vertices (positions into X, ascending) and, per matched x_i, the neighborhood
// S_i of its partner. slots has |X| entries; entries past x_prime.size() are empty.
struct TypeTuple {
    std::vector<int> x_prime;
    std::vector<VertexMask> slots;

    int size() const { return static_cast<int>(x_prime.size()); }
    bool operator==(const TypeTuple&) const = default;
};

struct TypeContext {
    std::vector<Vertex> cover;
    std::vector<Vertex> rest;                         // W, ascending
    std::vector<VertexMask> neighborhood;             // per vertex of the graph, as a cover mask
    std::map<VertexMask, std::vector<Vertex>> gamma;  // realized nonempty neighborhoods

    int is_present(int cover_pos, const TypeTuple& t) const;
    int false_twins(Vertex w) const;
    int nr_nbr_present(Vertex w, const TypeTuple& t) const;
};

TypeContext make_type_context(const Graph& g, std::vector<Vertex> cover);

std::vector<TypeTuple> enumerate_types(const TypeContext& ctx, std::size_t cap = 200'000);

struct PartialGuess {
    std::vector<EdgeId> h_prime;  // edges of G[X], ascending
    std::vector<int> colors;      // parallel to h_prime, 1..p0
    int p0 = 0;
};

std::vector<PartialGuess> enumerate_guesses(const Graph& g, const TypeContext& ctx, int p);

struct LinearConstraint {
    std::string family;                     // "I", "II", "III", "IV", "V", "V0", "VI"
    std::vector<std::pair<int, int>> terms;  // (variable, coefficient)
    int rhs = 0;                            // sum of terms <= rhs
};

struct IlpModel {
    std::vector<std::pair<int, int>> variables;  // (type index, alpha)
    std::vector<int> objective;
    std::vector<int> upper;  // lower bounds are 0
    std::vector<LinearConstraint> constraints;

    std::string variable_name(int var) const;
    int variable_index(int type, int alpha) const;
    int alphas = 1;  // p0 + 1
};

IlpModel build_ilp(const Graph& g, const TypeContext& ctx, const std::vector<TypeTuple>& types,
                   const PartialGuess& guess, int p);

void write_lp(std::ostream& os, const IlpModel& model);

struct IlpSolveOptions {
    std::uint64_t node_cap = 1'000'000;
    Deadline deadline;
};

struct IlpSolution {
    long long objective = 0;
    std::vector<int> values;
};

IlpSolution solve_ilp(const IlpModel& model, const IlpSolveOptions& opts = {});

bool satisfies(const IlpModel& model, const std::vector<int>& values);

EdgeColoring reconstruct(const Graph& g, const TypeContext& ctx, const std::vector<TypeTuple>& types,
                         const PartialGuess& guess, const IlpModel& model, const std::vector<int>& values, int p);

struct IlpOptions {
    int vc_cap = 4;
    std::size_t type_cap = 200'000;
    std::uint64_t node_cap = 1'000'000;
    Deadline deadline;
    std::ostream* dump = nullptr;
};

MecsSolution solve_via_ilp(const MecsInstance& inst, const IlpOptions& opts = {});

}  // namespace mecs
