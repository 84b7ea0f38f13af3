#pragma once

#include <optional>
#include <vector>

#include "maxminsep/vertex_set.hpp"

namespace maxminsep {

/// Selected sets whose pairwise intersections all equal `core`.
struct SunflowerDecomposition {
    VertexSet core;
    std::vector<VertexSet> petals;   // member minus core
    std::vector<VertexSet> members;  // the selected sets, same order as petals
};

/// Erdős–Rado extraction. Sets must be distinct and of one cardinality d.
/// Succeeds whenever |family| > d!(k-1)^d; may return none below that.
std::optional<SunflowerDecomposition> find_sunflower(const std::vector<VertexSet>& family, int k);

/// True when every pair of members meets exactly in core and petals match.
bool is_sunflower(const SunflowerDecomposition& sf);

}  // namespace maxminsep
