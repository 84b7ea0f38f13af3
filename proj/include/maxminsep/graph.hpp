#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "maxminsep/vertex_set.hpp"

namespace maxminsep {

/// Simple undirected graph on vertices 0..n-1 with per-vertex neighbor sets.
/// Mutation is limited to add_edge; algorithms take graphs by const
/// reference and never modify them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n()); }

    /// Adds {u,v}. Duplicates are ignored; loops and bad ids throw ContractViolation.
    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool valid(Vertex v) const { return v >= 0 && v < n(); }

    /// Edges as (u,v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& o) const = default;

private:
    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

/// Induced subgraph relabelled to 0..|keep|-1 in ascending order of the kept
/// ids; original_id maps new ids back.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original_id;

    VertexSet lift(const VertexSet& s) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Ordered cycle; consecutive entries (cyclically) are adjacent.
struct CycleRecord {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    VertexSet vertex_set() const { return VertexSet::from(vertices); }
    bool contains(Vertex v) const { return vertex_set().contains(v); }
};

/// Adjacent consecutive vertices, distinct vertices, odd length >= 3 and no chords.
bool is_chordless_odd_cycle(const Graph& g, const CycleRecord& c);

// Text format: `p <n> <m>` then m lines `e <u> <v>`, 1-indexed, `c` comments.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
/// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string graph_hash(const Graph& g);

/// Components of g[restrict], ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& restrict);
/// Vertices of g[restrict] reachable from `from` (from ∩ restrict as seeds).
VertexSet reachable(const Graph& g, const VertexSet& restrict, const VertexSet& from);
bool is_connected(const Graph& g, const VertexSet& restrict);

/// {u ∉ s : u adjacent to some vertex of s}
VertexSet neighborhood(const Graph& g, const VertexSet& s);

struct Bipartition {
    VertexSet left;
    VertexSet right;
};
/// Closed walk of odd length inside the restriction; vertices listed once,
/// the closing edge runs from back() to front().
struct OddClosedWalk {
    std::vector<Vertex> vertices;
};

/// Two-coloring of g[restrict] (each component's smallest vertex goes left)
/// or an odd closed walk proving none exists.
std::variant<Bipartition, OddClosedWalk> bipartition_or_odd_cycle(const Graph& g, const VertexSet& restrict);
bool is_bipartite(const Graph& g, const VertexSet& restrict);

/// A minimum-length odd cycle of g[restrict]. Among equal-length candidates
/// found by the per-source BFS, the lexicographically smallest vertex set wins.
std::optional<CycleRecord> shortest_odd_cycle(const Graph& g, const VertexSet& restrict);

}  // namespace maxminsep
