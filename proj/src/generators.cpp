#include "maxminsep/generators.hpp"

#include <random>

#include "maxminsep/errors.hpp"

namespace maxminsep::gen {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ContractViolation(what);
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path: n must be positive");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph clique(int n) {
    require(n >= 1, "clique: n must be positive");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete-bipartite: both sides must be nonempty");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph gnp(int n, double p, std::uint64_t seed) {
    require(n >= 1, "gnp: n must be positive");
    require(p >= 0.0 && p <= 1.0, "gnp: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // 53 random bits; avoids library-specific distribution code.
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) g.add_edge(i, j);
        }
    return g;
}

Graph clique_with_cycle(int n, int c) {
    require(n >= 1, "clique-with-cycle: n must be positive");
    require(c >= 3 && c % 2 == 1, "clique-with-cycle: cycle length must be odd and at least 3");
    Graph g(n + c - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    Vertex prev = 0;
    for (int i = 0; i < c - 1; ++i) {
        g.add_edge(prev, n + i);
        prev = n + i;
    }
    g.add_edge(prev, 0);
    return g;
}

}  // namespace maxminsep::gen
