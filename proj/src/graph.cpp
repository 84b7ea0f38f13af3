#include "maxminsep/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "maxminsep/errors.hpp"

namespace maxminsep {

namespace {

void require_within(const Graph& g, const VertexSet& s, const char* what) {
    if (s.bound() > g.n()) throw ContractViolation(std::string(what) + ": vertex id out of range");
}

// Rotate so the smallest vertex comes first and walk towards its smaller neighbour.
CycleRecord normalize_cycle(std::vector<Vertex> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return CycleRecord{std::move(c)};
}

// Parent-pointer paths from u and w up to their lowest common ancestor, joined
// into a cycle lca..u w..lca. Both vertices must sit on the same BFS layer.
std::vector<Vertex> close_cycle(const std::vector<Vertex>& parent, Vertex u, Vertex w) {
    std::vector<Vertex> up_u{u};
    std::vector<Vertex> up_w{w};
    while (parent[up_u.back()] != parent[up_w.back()]) {
        up_u.push_back(parent[up_u.back()]);
        up_w.push_back(parent[up_w.back()]);
    }
    const Vertex lca = parent[up_u.back()];
    std::vector<Vertex> cycle{lca};
    cycle.insert(cycle.end(), up_u.rbegin(), up_u.rend());
    cycle.insert(cycle.end(), up_w.begin(), up_w.end());
    return cycle;
}

}  // namespace

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {}

void Graph::add_edge(Vertex u, Vertex v) {
    if (!valid(u) || !valid(v)) throw ContractViolation("add_edge: vertex id out of range");
    if (u == v) throw ContractViolation("add_edge: self-loop");
    if (adj_[u].contains(v)) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s) out.insert(original_id[v]);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    require_within(g, keep, "induced_subgraph");
    InducedSubgraph out;
    out.original_id = keep.to_vector();
    std::vector<Vertex> new_id(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < out.original_id.size(); ++i) new_id[out.original_id[i]] = static_cast<Vertex>(i);
    out.graph = Graph(static_cast<int>(out.original_id.size()));
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u) & keep)
            if (u < v) out.graph.add_edge(new_id[u], new_id[v]);
    return out;
}

bool is_chordless_odd_cycle(const Graph& g, const CycleRecord& c) {
    const auto len = c.vertices.size();
    if (len < 3 || len % 2 == 0) return false;
    for (Vertex v : c.vertices)
        if (!g.valid(v)) return false;
    if (c.vertex_set().size() != len) return false;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(c.vertices[i], c.vertices[j]) != consecutive) return false;
        }
    }
    return true;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<Graph> g;
    long long declared_m = 0;
    long long edge_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (g) throw ParseError(line_no, "duplicate header");
            long long n = -1;
            long long m = -1;
            std::string extra;
            if (!(ls >> n >> m) || (ls >> extra) || n < 0 || m < 0)
                throw ParseError(line_no, "malformed header, expected `p <n> <m>`");
            g.emplace(static_cast<int>(n));
            declared_m = m;
            continue;
        }
        if (tag == "e") {
            if (!g) throw ParseError(line_no, "edge before header");
            long long u = 0;
            long long v = 0;
            std::string extra;
            if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(line_no, "malformed edge, expected `e <u> <v>`");
            if (u < 1 || v < 1 || u > g->n() || v > g->n()) throw ParseError(line_no, "vertex id out of range");
            if (u == v) throw ParseError(line_no, "self-loop");
            g->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            ++edge_lines;
            continue;
        }
        throw ParseError(line_no, "unknown line type `" + tag + "`");
    }
    if (!g) throw ParseError(line_no, "missing header");
    if (edge_lines != declared_m)
        throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " edges, found " +
                                      std::to_string(edge_lines));
    return *g;
}

std::string serialize_graph(const Graph& g) {
    std::string out = "p " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

VertexSet reachable(const Graph& g, const VertexSet& restrict, const VertexSet& from) {
    require_within(g, restrict, "reachable");
    VertexSet seen = from & restrict;
    std::vector<Vertex> stack = seen.to_vector();
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : (g.neighbors(u) & restrict) - seen) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& restrict) {
    require_within(g, restrict, "connected_components");
    std::vector<VertexSet> parts;
    VertexSet left = restrict;
    while (!left.empty()) {
        auto comp = reachable(g, left, VertexSet{left.front()});
        left -= comp;
        parts.push_back(std::move(comp));
    }
    return parts;
}

bool is_connected(const Graph& g, const VertexSet& restrict) {
    if (restrict.empty()) return true;
    return reachable(g, restrict, VertexSet{restrict.front()}) == restrict;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    require_within(g, s, "neighborhood");
    VertexSet out;
    for (Vertex v : s) out |= g.neighbors(v);
    return out - s;
}

std::variant<Bipartition, OddClosedWalk> bipartition_or_odd_cycle(const Graph& g, const VertexSet& restrict) {
    require_within(g, restrict, "bipartition_or_odd_cycle");
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> depth(n, -1);
    std::vector<Vertex> parent(n, -1);
    Bipartition parts;
    for (Vertex root : restrict) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        parent[root] = root;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            (depth[u] % 2 == 0 ? parts.left : parts.right).insert(u);
            for (Vertex w : g.neighbors(u) & restrict) {
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (depth[w] == depth[u]) {
                    return OddClosedWalk{close_cycle(parent, u, w)};
                }
            }
        }
    }
    return parts;
}

bool is_bipartite(const Graph& g, const VertexSet& restrict) {
    return std::holds_alternative<Bipartition>(bipartition_or_odd_cycle(g, restrict));
}

std::optional<CycleRecord> shortest_odd_cycle(const Graph& g, const VertexSet& restrict) {
    require_within(g, restrict, "shortest_odd_cycle");
    const auto n = static_cast<std::size_t>(g.n());
    std::optional<CycleRecord> best;
    VertexSet best_set;
    std::vector<int> depth(n);
    std::vector<Vertex> parent(n);
    for (Vertex root : restrict) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[root] = 0;
        parent[root] = root;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            // Same-layer edges at this depth close walks of length 2*depth+1.
            if (best && static_cast<std::size_t>(2 * depth[u] + 1) > best->length()) break;
            for (Vertex w : g.neighbors(u) & restrict) {
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (depth[w] == depth[u] && u < w) {
                    auto cycle = close_cycle(parent, u, w);
                    auto set = VertexSet::from(cycle);
                    if (!best || cycle.size() < best->length() ||
                        (cycle.size() == best->length() && set < best_set)) {
                        best = normalize_cycle(std::move(cycle));
                        best_set = std::move(set);
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace maxminsep
