#pragma once

#include <vector>

#include "maxminsep/graph.hpp"

namespace testsupport {

using maxminsep::Graph;
using maxminsep::Vertex;
using maxminsep::VertexSet;

// Subset-scan references, independent of the library's searches. n <= 20.

/// Vertex sets inducing a chordless odd cycle.
std::vector<VertexSet> chordless_odd_cycle_sets(const Graph& g);
bool chordless_odd_cycle_through(const Graph& g, Vertex x);
/// Some vertex set induces a path from a to b with an odd number of edges.
bool chordless_odd_path(const Graph& g, Vertex a, Vertex b);
/// Some vertex set induces an s-t path containing v.
bool chordless_path_through(const Graph& g, Vertex s, Vertex t, Vertex v);
/// Length of the shortest simple odd cycle, chords allowed; 0 when none.
int min_simple_odd_cycle_length(const Graph& g);

}  // namespace testsupport
