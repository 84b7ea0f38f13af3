#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxminsep/certificates.hpp"
#include "maxminsep/graph.hpp"
#include "maxminsep/oracle.hpp"
#include "maxminsep/solver_common.hpp"

namespace maxminsep {

/// (S, T, k, q) of the branching algorithm; the graph travels alongside.
struct BranchState {
    Vertex s = 0;
    Vertex t = 0;
    VertexSet s_side;
    VertexSet t_side;
    int k = 1;
    int q = 1;

    /// q - min(|S|, |T|)
    int measure() const;
};

/// Empty string when valid, else the violated condition.
std::string validate(const Graph& g, const BranchState& state);

struct StSepCounters {
    std::uint64_t nodes = 0;           // search-tree nodes (instances reduced)
    std::uint64_t branch_leaves = 0;   // leaves below at least one branching step
    std::uint64_t branchings = 0;      // applications of the branching rule
    int max_depth = 0;                 // branching steps on the deepest path
    std::uint64_t red1 = 0;
    std::uint64_t red2 = 0;
    std::uint64_t red3 = 0;
    std::uint64_t red4 = 0;
    std::uint64_t red5 = 0;

    StSepCounters& operator+=(const StSepCounters& o);
};

struct ReductionOutcome {
    enum class Kind { yes, no, promise_violation, proceed } kind = Kind::proceed;
    BranchState state;  // state after Red-1 growth
    std::optional<Witness> witness;
    std::vector<std::string> trace;
};

/// Applies Red-4, Red-3, Red-1 (one vertex at a time, then restarting at
/// Red-4), Red-2 and Red-5 until a verdict or a fixpoint. Yes verdicts carry
/// a witness checked by is_minimal_st_separator; a Red-4 witness smaller than
/// k yields promise_violation.
ReductionOutcome apply_reductions(const Graph& g, const BranchState& state, StSepCounters& counters,
                                  const SolverOptions& options = {});

struct StSepResult {
    Verdict verdict = Verdict::no;
    std::optional<Witness> witness;
    StSepCounters counters;
};

/// Reductions plus the branching rule from `state` downwards.
StSepResult branch(const Graph& g, const BranchState& state, const SolverOptions& options = {});

/// Entry point: S = {s}, T = {t}. Adjacent s,t answer no. With verify_promise
/// the (q,k)-unbreakability is checked first by the exhaustive oracle.
StSepResult solve_unbreakable_stsep(const Graph& g, Vertex s, Vertex t, int k, int q, bool verify_promise,
                                    const SolverOptions& options = {});

}  // namespace maxminsep
