#pragma once

#include <string>

#include "maxminsep/graph.hpp"

namespace maxminsep {

struct ReductionResult {
    enum class Case { same_side, opposite_side, apex };
    Graph output_graph;
    int k_out = 0;
    VertexSet added_vertices;  // ids n, n+1, ... of the input
    Case case_tag = Case::apex;
};

const char* to_string(ReductionResult::Case c);

/// Bipartite g: joins s and t by a path of two new vertices when they share a
/// colour class, one new vertex otherwise. Requires k >= 2.
ReductionResult stsep_to_oct(const Graph& g, Vertex s, Vertex t, int k);

/// Adds an apex adjacent to exactly a and b. k_out is unused (0).
ReductionResult odd_path_to_odd_cycle_gadget(const Graph& g, Vertex a, Vertex b);

/// {"case": ..., "k_out": ..., "added_vertices": [...]} with 1-indexed ids.
std::string reduction_sidecar_json(const ReductionResult& r);

}  // namespace maxminsep
