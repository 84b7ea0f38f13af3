#include "maxminsep/reductions.hpp"

#include <json.hpp>
#include <variant>

#include "maxminsep/errors.hpp"

namespace maxminsep {

namespace {

Graph with_extra_vertices(const Graph& g, int extra) {
    Graph out(g.n() + extra);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

}  // namespace

const char* to_string(ReductionResult::Case c) {
    switch (c) {
        case ReductionResult::Case::same_side: return "same-side";
        case ReductionResult::Case::opposite_side: return "opposite-side";
        case ReductionResult::Case::apex: return "apex";
    }
    return "unknown";
}

ReductionResult stsep_to_oct(const Graph& g, Vertex s, Vertex t, int k) {
    if (!g.valid(s) || !g.valid(t)) throw ContractViolation("stsep_to_oct: vertex id out of range");
    if (s == t) throw ContractViolation("stsep_to_oct: s == t");
    if (k < 2) throw ContractViolation("stsep_to_oct: k must be at least 2");
    auto coloring = bipartition_or_odd_cycle(g, g.vertices());
    if (!std::holds_alternative<Bipartition>(coloring)) throw ContractViolation("stsep_to_oct: graph not bipartite");
    const auto& parts = std::get<Bipartition>(coloring);

    // t in another component: flip that component so t sits opposite s.
    const bool same_component = reachable(g, g.vertices(), VertexSet{s}).contains(t);
    const bool same_side = same_component && parts.left.contains(s) == parts.left.contains(t);

    ReductionResult r;
    r.k_out = k;
    const Vertex n = g.n();
    if (same_side) {
        r.output_graph = with_extra_vertices(g, 2);
        r.output_graph.add_edge(s, n);
        r.output_graph.add_edge(n, n + 1);
        r.output_graph.add_edge(n + 1, t);
        r.added_vertices = VertexSet{n, n + 1};
        r.case_tag = ReductionResult::Case::same_side;
    } else {
        r.output_graph = with_extra_vertices(g, 1);
        r.output_graph.add_edge(s, n);
        r.output_graph.add_edge(n, t);
        r.added_vertices = VertexSet{n};
        r.case_tag = ReductionResult::Case::opposite_side;
    }
    return r;
}

ReductionResult odd_path_to_odd_cycle_gadget(const Graph& g, Vertex a, Vertex b) {
    if (!g.valid(a) || !g.valid(b)) throw ContractViolation("odd_path_to_odd_cycle_gadget: vertex id out of range");
    if (a == b) throw ContractViolation("odd_path_to_odd_cycle_gadget: a == b");
    ReductionResult r;
    const Vertex x = g.n();
    r.output_graph = with_extra_vertices(g, 1);
    r.output_graph.add_edge(x, a);
    r.output_graph.add_edge(x, b);
    r.added_vertices = VertexSet{x};
    r.case_tag = ReductionResult::Case::apex;
    return r;
}

std::string reduction_sidecar_json(const ReductionResult& r) {
    nlohmann::json j;
    j["case"] = to_string(r.case_tag);
    j["k_out"] = r.k_out;
    auto ids = nlohmann::json::array();
    for (Vertex v : r.added_vertices) ids.push_back(v + 1);
    j["added_vertices"] = ids;
    return j.dump(2);
}

}  // namespace maxminsep
