#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxminsep/oracle.hpp"
#include "maxminsep/vertex_set.hpp"

namespace maxminsep {

enum class Verdict { yes, no, promise_violation };

const char* to_string(Verdict v);

struct SolverOptions {
    /// Worker threads for independent subproblems. Verdicts and witnesses do not depend on it.
    int jobs = 1;
    /// Re-check data-structure invariants after every step (throws std::logic_error).
    bool check_invariants = false;
    /// Seed for the vertex ordering used by greedy certificate extension; unset = ascending ids.
    std::optional<std::uint64_t> extension_seed;
    oracle::Limits oracle_limits;
};

/// Permutation of 0..n-1 drawn from the seed, or empty (meaning ascending) when unset.
std::vector<Vertex> extension_order(int n, const std::optional<std::uint64_t>& seed);

}  // namespace maxminsep
