#include "random_certificates.hpp"

#include <algorithm>

#include "maxminsep/generators.hpp"

namespace testsupport {

using namespace maxminsep;

namespace {

Graph random_graph(std::mt19937_64& rng) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const double p = 0.15 + 0.55 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return gen::gnp(n, p, rng());
}

Vertex pick(const VertexSet& s, std::mt19937_64& rng) {
    const auto v = s.to_vector();
    return v[rng() % v.size()];
}

// Random connected growth inside `allowed`, starting from `seed`.
VertexSet grow(const Graph& g, Vertex seed, const VertexSet& allowed, std::mt19937_64& rng) {
    VertexSet side{seed};
    const int steps = static_cast<int>(rng() % 4);
    for (int i = 0; i < steps; ++i) {
        const VertexSet frontier = neighborhood(g, side) & allowed;
        if (frontier.empty()) break;
        side.insert(pick(frontier, rng));
    }
    return side;
}

VertexSet random_subset(const VertexSet& s, std::mt19937_64& rng) {
    VertexSet out;
    for (Vertex v : s)
        if (rng() % 2) out.insert(v);
    return out;
}

std::vector<Vertex> random_order(int n, std::mt19937_64& rng) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

}  // namespace

std::optional<SeparatorCase> random_separator_case(std::mt19937_64& rng) {
    SeparatorCase c;
    c.g = random_graph(rng);
    const Graph& g = c.g;
    const Vertex s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.n()));
    // Keep s-side growth away from a reserved candidate t when possible.
    const VertexSet s_side = grow(g, s, g.vertices().without(s), rng);
    const VertexSet t_pool = g.vertices() - s_side - neighborhood(g, s_side);
    if (t_pool.empty()) return std::nullopt;
    const Vertex t = pick(t_pool, rng);
    VertexSet t_side{t};
    const int steps = static_cast<int>(rng() % 4);
    for (int i = 0; i < steps; ++i) {
        const VertexSet frontier = neighborhood(g, t_side) & t_pool;
        if (frontier.empty()) break;
        t_side.insert(pick(frontier, rng));
    }
    c.cert = SeparatorCertificate{s, t, s_side, t_side};
    c.req.forced = random_subset(neighborhood(g, s_side) & neighborhood(g, t_side), rng);
    c.order = random_order(g.n(), rng);
    return c;
}

OctCase random_oct_case(std::mt19937_64& rng) {
    OctCase c;
    c.g = random_graph(rng);
    const Graph& g = c.g;
    VertexSet base;
    for (Vertex v : random_order(g.n(), rng)) {
        if (rng() % 3 == 0) continue;
        if (is_bipartite(g, base.with(v))) base.insert(v);
    }
    VertexSet closers;
    for (Vertex v : g.vertices() - base)
        if (!is_bipartite(g, base.with(v))) closers.insert(v);
    c.cert = OctCertificate{base};
    c.req.forced = random_subset(closers, rng);
    c.order = random_order(g.n(), rng);
    return c;
}

}  // namespace testsupport
