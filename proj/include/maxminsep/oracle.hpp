#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxminsep/certificates.hpp"
#include "maxminsep/graph.hpp"

namespace maxminsep::oracle {

// Exhaustive ground truth for desk-scale instances. Everything here works on
// 64-bit vertex masks and shares no search code with the FPT solvers.

inline constexpr int kDefaultMaxVertices = 22;
inline constexpr int kHardMaxVertices = 63;

struct Limits {
    int max_vertices = kDefaultMaxVertices;
};

/// Throws GuardExceeded when g is above the limit (or above 63 vertices).
void require_desk_scale(const Graph& g, const Limits& limits, const char* what);

struct Separation {
    VertexSet x_side;
    VertexSet y_side;

    std::size_t order() const { return (x_side & y_side).size(); }
};

struct BreakabilityVerdict {
    bool breakable = false;
    std::optional<Separation> witness;
};

/// Minimal st-separators in canonical order (size, then lexicographic),
/// optionally capped at size_cap. Adjacent s,t give an empty list.
std::vector<VertexSet> enumerate_minimal_st_separators(const Graph& g, Vertex s, Vertex t,
                                                       std::optional<int> size_cap = std::nullopt,
                                                       const Limits& limits = {});

/// All minimal odd cycle transversals, canonical order.
std::vector<VertexSet> enumerate_minimal_octs(const Graph& g, const Limits& limits = {});

/// Largest minimal st-separator (first in canonical order among the largest).
std::optional<VertexSet> max_minimal_st_separator(const Graph& g, Vertex s, Vertex t, const Limits& limits = {});
/// Largest minimal oct (∅ on bipartite graphs).
VertexSet max_minimal_oct(const Graph& g, const Limits& limits = {});

/// yes: a verified witness of size >= k. nullopt: no.
std::optional<Witness> maxmin_stsep_bruteforce(const Graph& g, Vertex s, Vertex t, int k, const Limits& limits = {});
std::optional<Witness> maxmin_oct_bruteforce(const Graph& g, int k, const Limits& limits = {});

BreakabilityVerdict breakability_witness(const Graph& g, int q, int k, const Limits& limits = {});
/// Checks the witnessing-separation conditions directly.
bool is_witnessing_separation(const Graph& g, const Separation& sep, int q, int k);

/// Chordless s-t path through v, listed from s to t.
std::optional<std::vector<Vertex>> induced_st_path_through(const Graph& g, Vertex s, Vertex t, Vertex v,
                                                           const Limits& limits = {});
std::optional<CycleRecord> induced_odd_cycle_through(const Graph& g, Vertex v, const Limits& limits = {});

inline bool exists_induced_st_path_through(const Graph& g, Vertex s, Vertex t, Vertex v, const Limits& limits = {}) {
    return induced_st_path_through(g, s, t, v, limits).has_value();
}
inline bool exists_induced_odd_cycle_through(const Graph& g, Vertex v, const Limits& limits = {}) {
    return induced_odd_cycle_through(g, v, limits).has_value();
}

}  // namespace maxminsep::oracle
