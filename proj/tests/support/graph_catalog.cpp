#include "graph_catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "maxminsep/generators.hpp"

namespace testsupport {

namespace {

// Stable colour refinement; cells come out in an isomorphism-invariant order.
std::vector<int> refine(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, 0);
    int classes = 1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (int u : g.neighbors(v)) sig[v].second.push_back(color[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        const int next = static_cast<int>(distinct.size());
        if (next == classes) return color;
        classes = next;
    }
}

std::uint64_t encode(const Graph& g, const std::vector<int>& pos) {
    const int n = g.n();
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = code << 1 | (g.adjacent(at[i], at[j]) ? 1u : 0u);
    return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > 8) throw std::invalid_argument("canonical_code: at most 8 vertices");
    const int n = g.n();
    const auto color = refine(g);
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    std::vector<std::vector<int>> cells(classes);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> pos(n);
    // Odometer over per-cell permutations.
    std::function<void(int, int)> go = [&](int cell, int offset) {
        if (cell == classes) {
            best = std::min(best, encode(g, pos));
            return;
        }
        auto members = cells[cell];
        do {
            for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = offset + static_cast<int>(i);
            go(cell + 1, offset + static_cast<int>(members.size()));
        } while (std::next_permutation(members.begin(), members.end()));
    };
    go(0, 0);
    return best ^ (std::uint64_t{static_cast<unsigned>(n)} << 58);
}

const std::vector<Graph>& all_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (n < 1 || n > 8) throw std::invalid_argument("all_graphs: n must lie in 1..8");
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
    } else {
        std::unordered_set<std::uint64_t> seen;
        for (const Graph& h : all_graphs(n - 1)) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                Graph g(n);
                for (auto [u, v] : h.edges()) g.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if (mask >> u & 1) g.add_edge(u, n - 1);
                if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
            }
        }
    }
    return cache[n] = std::move(out);
}

const std::vector<Graph>& connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (maxminsep::is_connected(g, g.vertices())) out.push_back(g);
    return cache[n] = std::move(out);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges_1based) {
    Graph g(n);
    for (auto [u, v] : edges_1based) g.add_edge(u - 1, v - 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

std::vector<Graph> random_graphs(int count, int lo, int hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
        const double p = 0.2 + 0.6 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back(maxminsep::gen::gnp(n, p, rng()));
    }
    return out;
}

}  // namespace testsupport
