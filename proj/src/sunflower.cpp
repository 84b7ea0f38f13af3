#include "maxminsep/sunflower.hpp"

#include <map>

#include "maxminsep/errors.hpp"

namespace maxminsep {

namespace {

std::optional<SunflowerDecomposition> extract(const std::vector<VertexSet>& family, int k) {
    if (family.empty()) return std::nullopt;

    SunflowerDecomposition disjoint;
    VertexSet used;
    for (const auto& a : family) {
        if (a.intersects(used)) continue;
        used |= a;
        disjoint.members.push_back(a);
        disjoint.petals.push_back(a);
    }
    if (static_cast<int>(disjoint.members.size()) >= k) return disjoint;

    // Some element of the disjoint union lies in many sets; recurse on its link.
    std::map<Vertex, int> freq;
    for (const auto& a : family)
        for (Vertex v : a) ++freq[v];
    Vertex best = -1;
    int best_count = 0;
    for (auto [v, c] : freq)
        if (c > best_count) best = v, best_count = c;
    if (best < 0) return std::nullopt;

    std::vector<VertexSet> link;
    for (const auto& a : family)
        if (a.contains(best)) link.push_back(a.without(best));
    auto inner = extract(link, k);
    if (!inner) return std::nullopt;
    inner->core.insert(best);
    for (auto& m : inner->members) m.insert(best);
    return inner;
}

}  // namespace

std::optional<SunflowerDecomposition> find_sunflower(const std::vector<VertexSet>& family, int k) {
    if (k < 1) throw ContractViolation("find_sunflower: k must be positive");
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].size() != family.front().size())
            throw ContractViolation("find_sunflower: sets of unequal cardinality");
        for (std::size_t j = 0; j < i; ++j)
            if (family[i] == family[j]) throw ContractViolation("find_sunflower: repeated set");
    }
    return extract(family, k);
}

bool is_sunflower(const SunflowerDecomposition& sf) {
    if (sf.members.size() != sf.petals.size()) return false;
    for (std::size_t i = 0; i < sf.members.size(); ++i) {
        if (!sf.core.is_subset_of(sf.members[i]) || sf.petals[i] != sf.members[i] - sf.core) return false;
        for (std::size_t j = 0; j < i; ++j)
            if ((sf.members[i] & sf.members[j]) != sf.core) return false;
    }
    return true;
}

}  // namespace maxminsep
