#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxminsep/certificates.hpp"
#include "maxminsep/graph.hpp"
#include "maxminsep/solver_common.hpp"
#include "maxminsep/sunflower.hpp"

namespace maxminsep {

/// a*b and friends clamped at UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_factorial(int n);
std::uint64_t saturating_pow(std::uint64_t base, int exp);

/// d * d! * (k-1)^d, the family size that ends the classification.
std::uint64_t family_bound(int d, int k);
/// (2q+2)^2 * (2q+2)! * (k-1)^(2q+2); at or below it the solver uses brute force.
std::uint64_t oct_size_cutoff(int k, int q);

struct ClassifyCounters {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t max_iterations_per_branch = 0;  // cycles appended along one branch
    std::uint64_t max_guesses_per_step = 0;
};

struct VertexClassification {
    enum class Outcome { cycle_through_x, long_cycle, large_family, no_cycle_through_x };
    Outcome outcome = Outcome::no_cycle_through_x;
    std::optional<CycleRecord> cycle;  // outcomes cycle_through_x and long_cycle
    std::vector<CycleRecord> family;   // outcome large_family
    ClassifyCounters counters;
};

const char* to_string(VertexClassification::Outcome o);

/// Shortest-odd-cycle search with guessed deletions. Returns the first of
/// outcomes 1-3 found in depth-first order, else no_cycle_through_x.
VertexClassification classify_vertex(const Graph& g, Vertex x, int d, int k);

struct LongCycleGrowthState {
    VertexSet s_path;
    VertexSet t_path;
    Vertex x = 0;
    Vertex y = 0;
    VertexSet z_x;
    VertexSet z_y;
    VertexSet marked;
};

/// Empty when all growth invariants hold, else the first broken one.
std::string check_growth_invariants(const Graph& g, const LongCycleGrowthState& st, int q);

struct LongCycleGrowth {
    std::optional<Witness> witness;  // unset: insufficient
    LongCycleGrowthState state;      // final state
    std::uint64_t iterations = 0;
};

/// Grows S, T, Z_x, Z_y from a chordless odd cycle of length >= 2q+2 and
/// extends whichever of Z_x, Z_y reaches k into a minimal oct.
LongCycleGrowth grow_from_long_cycle(const Graph& g, const CycleRecord& c, int q, int k,
                                     const SolverOptions& options = {});

/// Sunflower with k petals inside one length bucket, then greedy extension
/// from its core. Buckets holding more than l!(k-1)^l cycles always yield
/// one; none when no bucket does.
std::optional<Witness> oct_from_small_cycles(const Graph& g, const std::vector<CycleRecord>& family, int d, int k,
                                             const SolverOptions& options = {});

struct OctCounters {
    std::uint64_t deletions = 0;
    std::uint64_t classify_calls = 0;
    std::uint64_t classify_nodes = 0;
    std::uint64_t max_iterations_per_branch = 0;
    std::uint64_t max_guesses_per_step = 0;
    std::uint64_t growth_iterations = 0;
    std::uint64_t bruteforce_calls = 0;
};

struct OctResult {
    Verdict verdict = Verdict::no;
    std::optional<Witness> witness;
    OctCounters counters;
    std::string route;  // which step decided the verdict
};

/// MaxMin OCT on (q,2k)-unbreakable graphs. Brute force at or below the size
/// cutoff unless force_fpt_path; otherwise classification, growth and
/// irrelevant-vertex deletion. Witnesses refer to g's vertex ids.
OctResult solve_unbreakable_oct(const Graph& g, int k, int q, bool force_fpt_path, bool verify_promise,
                                const SolverOptions& options = {},
                                std::optional<std::uint64_t> cutoff_override = std::nullopt);

}  // namespace maxminsep
