#pragma once

#include <cstdint>

#include "maxminsep/graph.hpp"

namespace maxminsep::gen {

Graph path(int n);
Graph cycle(int n);
Graph clique(int n);
Graph complete_bipartite(int a, int b);
/// Each pair independently with probability p; identical output for identical seeds.
Graph gnp(int n, double p, std::uint64_t seed);
/// K_n plus a chordless odd cycle of length c sharing exactly vertex 0 with the clique.
Graph clique_with_cycle(int n, int c);

}  // namespace maxminsep::gen
