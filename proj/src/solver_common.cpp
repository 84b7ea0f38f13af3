#include "maxminsep/solver_common.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace maxminsep {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::promise_violation: return "promise_violation";
    }
    return "unknown";
}

std::vector<Vertex> extension_order(int n, const std::optional<std::uint64_t>& seed) {
    if (!seed) return {};
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // Fisher-Yates driven directly by the engine so the permutation is stable across standard libraries.
    std::mt19937_64 rng(*seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    return order;
}

}  // namespace maxminsep
