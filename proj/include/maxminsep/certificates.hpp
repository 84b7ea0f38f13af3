#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxminsep/graph.hpp"

namespace maxminsep {

enum class WitnessKind { minimal_st_separator, minimal_oct };

struct Witness {
    WitnessKind kind = WitnessKind::minimal_st_separator;
    int k = 0;
    std::optional<Vertex> s;
    std::optional<Vertex> t;
    VertexSet solution;
    std::vector<std::string> trace;
};

const char* to_string(WitnessKind kind);

// Minimality checkers.

/// Z separates s from t and every z in Z has a neighbour in both the s-side
/// and the t-side component of G - Z.
bool is_minimal_st_separator(const Graph& g, Vertex s, Vertex t, const VertexSet& z);
/// Set-to-set variant for disjoint connected S and T with no S-T edges.
bool is_minimal_set_separator(const Graph& g, const VertexSet& s_side, const VertexSet& t_side, const VertexSet& z);
bool is_minimal_oct(const Graph& g, const VertexSet& z);

/// Re-runs the checker matching w.kind. Separator witnesses need s and t.
bool verify_witness(const Graph& g, const Witness& w);

// Certificates.

struct SeparatorCertificate {
    Vertex s = 0;
    Vertex t = 0;
    VertexSet s_side;
    VertexSet t_side;
};

struct OctCertificate {
    VertexSet base;
};

struct ExtensionRequest {
    VertexSet forced;
};

enum class CertificateFault {
    none,
    invalid_vertex,
    s_not_in_s_side,
    t_not_in_t_side,
    sides_overlap,
    s_side_disconnected,
    t_side_disconnected,
    edge_between_sides,
    forced_overlaps_certificate,
    forced_vertex_not_linking,  // G[S ∪ T ∪ {v}] disconnected
    base_not_bipartite,
    forced_vertex_no_odd_cycle,  // G[base ∪ {v}] bipartite
};

const char* to_string(CertificateFault f);

struct CertificateCheck {
    CertificateFault fault = CertificateFault::none;
    std::optional<Vertex> vertex;

    explicit operator bool() const { return fault == CertificateFault::none; }
};

CertificateCheck check_separator_certificate(const Graph& g, const SeparatorCertificate& cert,
                                             const ExtensionRequest& req);
CertificateCheck check_oct_certificate(const Graph& g, const OctCertificate& cert, const ExtensionRequest& req);

/// Greedy extension of a separator certificate to a minimal st-separator
/// containing req.forced. `order` must list every vertex outside
/// s_side ∪ t_side exactly once; other entries are skipped. An empty order
/// means ascending ids.
Witness extend_separator_certificate(const Graph& g, const SeparatorCertificate& cert, const ExtensionRequest& req,
                                     const std::vector<Vertex>& order = {});

/// Greedy extension of a bipartite base to a minimal oct containing
/// req.forced. Same ordering contract as the separator variant.
Witness extend_oct_certificate(const Graph& g, const OctCertificate& cert, const ExtensionRequest& req,
                               const std::vector<Vertex>& order = {});

}  // namespace maxminsep
