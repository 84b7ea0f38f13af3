#include "maxminsep/certificates.hpp"

#include "maxminsep/errors.hpp"

namespace maxminsep {

namespace {

std::string id(Vertex v) { return std::to_string(v + 1); }

// Resolves the caller's ordering into the sequence of vertices to process.
std::vector<Vertex> processing_order(const Graph& g, const VertexSet& pending, const std::vector<Vertex>& order) {
    if (order.empty()) return pending.to_vector();
    std::vector<Vertex> out;
    VertexSet seen;
    for (Vertex v : order) {
        if (!g.valid(v)) throw ContractViolation("extension order: vertex id out of range");
        if (!pending.contains(v)) continue;
        if (seen.contains(v)) throw ContractViolation("extension order: vertex " + id(v) + " repeated");
        seen.insert(v);
        out.push_back(v);
    }
    if (seen != pending) throw ContractViolation("extension order does not cover every pending vertex");
    return out;
}

bool separates_minimally(const Graph& g, const VertexSet& s_side, const VertexSet& t_side, const VertexSet& z) {
    const VertexSet rest = g.vertices() - z;
    const VertexSet from_s = reachable(g, rest, s_side);
    if (from_s.intersects(t_side)) return false;
    const VertexSet from_t = reachable(g, rest, t_side);
    for (Vertex v : z) {
        if (!g.neighbors(v).intersects(from_s) || !g.neighbors(v).intersects(from_t)) return false;
    }
    return true;
}

}  // namespace

const char* to_string(WitnessKind kind) {
    return kind == WitnessKind::minimal_st_separator ? "minimal-st-separator" : "minimal-oct";
}

const char* to_string(CertificateFault f) {
    switch (f) {
        case CertificateFault::none: return "none";
        case CertificateFault::invalid_vertex: return "invalid-vertex";
        case CertificateFault::s_not_in_s_side: return "s-not-in-s-side";
        case CertificateFault::t_not_in_t_side: return "t-not-in-t-side";
        case CertificateFault::sides_overlap: return "sides-overlap";
        case CertificateFault::s_side_disconnected: return "s-side-disconnected";
        case CertificateFault::t_side_disconnected: return "t-side-disconnected";
        case CertificateFault::edge_between_sides: return "edge-between-sides";
        case CertificateFault::forced_overlaps_certificate: return "forced-overlaps-certificate";
        case CertificateFault::forced_vertex_not_linking: return "forced-vertex-not-linking";
        case CertificateFault::base_not_bipartite: return "base-not-bipartite";
        case CertificateFault::forced_vertex_no_odd_cycle: return "forced-vertex-no-odd-cycle";
    }
    return "unknown";
}

bool is_minimal_st_separator(const Graph& g, Vertex s, Vertex t, const VertexSet& z) {
    if (!g.valid(s) || !g.valid(t) || z.bound() > g.n())
        throw ContractViolation("is_minimal_st_separator: vertex id out of range");
    if (s == t) throw ContractViolation("is_minimal_st_separator: s == t");
    if (z.contains(s) || z.contains(t)) throw ContractViolation("is_minimal_st_separator: s or t inside Z");
    return separates_minimally(g, VertexSet{s}, VertexSet{t}, z);
}

bool is_minimal_set_separator(const Graph& g, const VertexSet& s_side, const VertexSet& t_side, const VertexSet& z) {
    if (s_side.bound() > g.n() || t_side.bound() > g.n() || z.bound() > g.n())
        throw ContractViolation("is_minimal_set_separator: vertex id out of range");
    if (s_side.empty() || t_side.empty() || s_side.intersects(t_side))
        throw ContractViolation("is_minimal_set_separator: sides must be nonempty and disjoint");
    if (z.intersects(s_side) || z.intersects(t_side))
        throw ContractViolation("is_minimal_set_separator: Z meets a side");
    return separates_minimally(g, s_side, t_side, z);
}

bool is_minimal_oct(const Graph& g, const VertexSet& z) {
    if (z.bound() > g.n()) throw ContractViolation("is_minimal_oct: vertex id out of range");
    const VertexSet rest = g.vertices() - z;
    if (!is_bipartite(g, rest)) return false;
    for (Vertex v : z) {
        if (is_bipartite(g, rest.with(v))) return false;
    }
    return true;
}

bool verify_witness(const Graph& g, const Witness& w) {
    if (w.solution.bound() > g.n()) return false;
    if (w.kind == WitnessKind::minimal_oct) return is_minimal_oct(g, w.solution);
    if (!w.s || !w.t || !g.valid(*w.s) || !g.valid(*w.t) || *w.s == *w.t) return false;
    if (w.solution.contains(*w.s) || w.solution.contains(*w.t)) return false;
    return is_minimal_st_separator(g, *w.s, *w.t, w.solution);
}

CertificateCheck check_separator_certificate(const Graph& g, const SeparatorCertificate& cert,
                                             const ExtensionRequest& req) {
    using F = CertificateFault;
    if (!g.valid(cert.s) || !g.valid(cert.t) || cert.s_side.bound() > g.n() || cert.t_side.bound() > g.n() ||
        req.forced.bound() > g.n())
        return {F::invalid_vertex, std::nullopt};
    if (!cert.s_side.contains(cert.s)) return {F::s_not_in_s_side, cert.s};
    if (!cert.t_side.contains(cert.t)) return {F::t_not_in_t_side, cert.t};
    if (cert.s_side.intersects(cert.t_side)) return {F::sides_overlap, (cert.s_side & cert.t_side).front()};
    if (!is_connected(g, cert.s_side)) return {F::s_side_disconnected, std::nullopt};
    if (!is_connected(g, cert.t_side)) return {F::t_side_disconnected, std::nullopt};
    const VertexSet n_s = neighborhood(g, cert.s_side);
    if (n_s.intersects(cert.t_side)) return {F::edge_between_sides, (n_s & cert.t_side).front()};
    const VertexSet both = cert.s_side | cert.t_side;
    if (req.forced.intersects(both)) return {F::forced_overlaps_certificate, (req.forced & both).front()};
    const VertexSet n_t = neighborhood(g, cert.t_side);
    for (Vertex v : req.forced) {
        // S and T are connected and non-adjacent, so v links them iff it touches both.
        if (!n_s.contains(v) || !n_t.contains(v)) return {F::forced_vertex_not_linking, v};
    }
    return {};
}

CertificateCheck check_oct_certificate(const Graph& g, const OctCertificate& cert, const ExtensionRequest& req) {
    using F = CertificateFault;
    if (cert.base.bound() > g.n() || req.forced.bound() > g.n()) return {F::invalid_vertex, std::nullopt};
    if (!is_bipartite(g, cert.base)) return {F::base_not_bipartite, std::nullopt};
    if (req.forced.intersects(cert.base))
        return {F::forced_overlaps_certificate, (req.forced & cert.base).front()};
    for (Vertex v : req.forced) {
        if (is_bipartite(g, cert.base.with(v))) return {F::forced_vertex_no_odd_cycle, v};
    }
    return {};
}

Witness extend_separator_certificate(const Graph& g, const SeparatorCertificate& cert, const ExtensionRequest& req,
                                     const std::vector<Vertex>& order) {
    if (auto check = check_separator_certificate(g, cert, req); !check)
        throw ContractViolation(std::string("extend_separator_certificate: invalid certificate (") +
                                to_string(check.fault) + ")");
    Witness w;
    w.kind = WitnessKind::minimal_st_separator;
    w.s = cert.s;
    w.t = cert.t;
    w.trace.push_back("extend-separator s=" + id(cert.s) + " t=" + id(cert.t) + " S=" + cert.s_side.to_string() +
                      " T=" + cert.t_side.to_string() + " forced=" + req.forced.to_string());

    VertexSet s_side = cert.s_side;
    VertexSet t_side = cert.t_side;
    VertexSet kept = s_side | t_side;  // vertex set of G'
    const VertexSet pending = g.vertices() - kept;
    for (Vertex v : processing_order(g, pending, order)) {
        const VertexSet& nv = g.neighbors(v);
        if (nv.intersects(s_side) && nv.intersects(t_side)) {
            w.solution.insert(v);
            w.trace.push_back("cut " + id(v));
        } else {
            kept.insert(v);
            s_side = reachable(g, kept, s_side);
            t_side = reachable(g, kept, t_side);
            w.trace.push_back("keep " + id(v));
        }
    }
    return w;
}

Witness extend_oct_certificate(const Graph& g, const OctCertificate& cert, const ExtensionRequest& req,
                               const std::vector<Vertex>& order) {
    if (auto check = check_oct_certificate(g, cert, req); !check)
        throw ContractViolation(std::string("extend_oct_certificate: invalid certificate (") + to_string(check.fault) +
                                ")");
    Witness w;
    w.kind = WitnessKind::minimal_oct;
    w.trace.push_back("extend-oct base=" + cert.base.to_string() + " forced=" + req.forced.to_string());

    VertexSet base = cert.base;
    const VertexSet pending = g.vertices() - base;
    for (Vertex v : processing_order(g, pending, order)) {
        auto grown = base.with(v);
        if (is_bipartite(g, grown)) {
            base = std::move(grown);
            w.trace.push_back("keep " + id(v));
        } else {
            w.solution.insert(v);
            w.trace.push_back("cut " + id(v));
        }
    }
    return w;
}

}  // namespace maxminsep
