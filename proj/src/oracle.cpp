#include "maxminsep/oracle.hpp"

#include <algorithm>
#include <bit>

#include "maxminsep/errors.hpp"

namespace maxminsep::oracle {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

struct MaskGraph {
    int n = 0;
    std::vector<Mask> adj;

    explicit MaskGraph(const Graph& g) : n(g.n()), adj(static_cast<std::size_t>(g.n()), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
    }

    Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    Mask reach(Mask seeds, Mask allowed) const {
        Mask seen = seeds & allowed;
        Mask frontier = seen;
        while (frontier != 0) {
            const int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const Mask fresh = adj[u] & allowed & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return seen;
    }

    bool connects(Vertex s, Vertex t, Mask allowed) const { return (reach(bit(s), allowed) & bit(t)) != 0; }

    bool bipartite(Mask allowed) const {
        Mask left = 0;
        Mask right = 0;
        Mask todo = allowed;
        while (todo != 0) {
            const Mask root = todo & (~todo + 1);
            left |= root;
            Mask frontier = root;
            bool on_left = true;
            while (frontier != 0) {
                Mask next = 0;
                for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
                next &= allowed;
                Mask& same = on_left ? left : right;
                Mask& other = on_left ? right : left;
                if ((next & same) != 0) return false;
                next &= ~other;
                other |= next;
                frontier = next;
                on_left = !on_left;
            }
            todo &= ~(left | right);
        }
        return true;
    }

    bool minimal_separator(Vertex s, Vertex t, Mask z) const {
        const Mask rest = all() & ~z;
        if (connects(s, t, rest)) return false;
        for (Mask r = z; r != 0; r &= r - 1) {
            if (!connects(s, t, rest | (r & (~r + 1)))) return false;
        }
        return true;
    }

    bool minimal_oct(Mask z) const {
        const Mask rest = all() & ~z;
        if (!bipartite(rest)) return false;
        for (Mask r = z; r != 0; r &= r - 1) {
            if (bipartite(rest | (r & (~r + 1)))) return false;
        }
        return true;
    }
};

VertexSet to_set(Mask m) {
    VertexSet s;
    for (; m != 0; m &= m - 1) s.insert(std::countr_zero(m));
    return s;
}

// Calls f(mask) for each subset of `pool` of exactly `size` members, mapped
// from the pool's bit positions. Returns true as soon as f does.
template <typename F>
bool for_each_subset_of_size(const std::vector<Vertex>& pool, int size, F&& f) {
    const int p = static_cast<int>(pool.size());
    if (size < 0 || size > p) return false;
    if (size == 0) return f(Mask{0});
    Mask pick = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << p;
    while (pick < limit) {
        Mask z = 0;
        for (Mask r = pick; r != 0; r &= r - 1) z |= bit(pool[std::countr_zero(r)]);
        if (f(z)) return true;
        const Mask low = pick & (~pick + 1);
        const Mask ripple = pick + low;
        pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
    return false;
}

void canonical_sort(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
    if (!g.valid(v)) throw ContractViolation(std::string(what) + ": vertex id out of range");
}

std::vector<Vertex> pool_without(int n, std::initializer_list<Vertex> drop) {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) pool.push_back(v);
    return pool;
}

}  // namespace

void require_desk_scale(const Graph& g, const Limits& limits, const char* what) {
    const int cap = std::min(limits.max_vertices, kHardMaxVertices);
    if (g.n() > cap)
        throw GuardExceeded(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceeds the oracle limit of " +
                            std::to_string(cap));
}

std::vector<VertexSet> enumerate_minimal_st_separators(const Graph& g, Vertex s, Vertex t,
                                                       std::optional<int> size_cap, const Limits& limits) {
    require_desk_scale(g, limits, "enumerate_minimal_st_separators");
    require_vertex(g, s, "enumerate_minimal_st_separators");
    require_vertex(g, t, "enumerate_minimal_st_separators");
    if (s == t) throw ContractViolation("enumerate_minimal_st_separators: s == t");
    std::vector<VertexSet> out;
    if (g.adjacent(s, t)) return out;
    const MaskGraph mg(g);
    const auto pool = pool_without(g.n(), {s, t});
    const int top = std::min(static_cast<int>(pool.size()), size_cap.value_or(static_cast<int>(pool.size())));
    for (int size = 0; size <= top; ++size) {
        for_each_subset_of_size(pool, size, [&](Mask z) {
            if (mg.minimal_separator(s, t, z)) out.push_back(to_set(z));
            return false;
        });
    }
    canonical_sort(out);
    return out;
}

std::vector<VertexSet> enumerate_minimal_octs(const Graph& g, const Limits& limits) {
    require_desk_scale(g, limits, "enumerate_minimal_octs");
    const MaskGraph mg(g);
    const auto pool = pool_without(g.n(), {});
    std::vector<VertexSet> out;
    for (int size = 0; size <= g.n(); ++size) {
        for_each_subset_of_size(pool, size, [&](Mask z) {
            if (mg.minimal_oct(z)) out.push_back(to_set(z));
            return false;
        });
    }
    canonical_sort(out);
    return out;
}

std::optional<VertexSet> max_minimal_st_separator(const Graph& g, Vertex s, Vertex t, const Limits& limits) {
    require_desk_scale(g, limits, "max_minimal_st_separator");
    require_vertex(g, s, "max_minimal_st_separator");
    require_vertex(g, t, "max_minimal_st_separator");
    if (s == t) throw ContractViolation("max_minimal_st_separator: s == t");
    if (g.adjacent(s, t)) return std::nullopt;
    const MaskGraph mg(g);
    const auto pool = pool_without(g.n(), {s, t});
    for (int size = static_cast<int>(pool.size()); size >= 0; --size) {
        std::vector<VertexSet> found;
        for_each_subset_of_size(pool, size, [&](Mask z) {
            if (mg.minimal_separator(s, t, z)) found.push_back(to_set(z));
            return false;
        });
        if (!found.empty()) return *std::min_element(found.begin(), found.end());
    }
    return std::nullopt;  // unreachable: some minimal separator always exists for non-adjacent s,t
}

VertexSet max_minimal_oct(const Graph& g, const Limits& limits) {
    require_desk_scale(g, limits, "max_minimal_oct");
    const MaskGraph mg(g);
    const auto pool = pool_without(g.n(), {});
    for (int size = g.n(); size >= 0; --size) {
        std::vector<VertexSet> found;
        for_each_subset_of_size(pool, size, [&](Mask z) {
            if (mg.minimal_oct(z)) found.push_back(to_set(z));
            return false;
        });
        if (!found.empty()) return *std::min_element(found.begin(), found.end());
    }
    return {};
}

std::optional<Witness> maxmin_stsep_bruteforce(const Graph& g, Vertex s, Vertex t, int k, const Limits& limits) {
    auto best = max_minimal_st_separator(g, s, t, limits);
    if (!best || static_cast<int>(best->size()) < k) return std::nullopt;
    Witness w;
    w.kind = WitnessKind::minimal_st_separator;
    w.k = k;
    w.s = s;
    w.t = t;
    w.solution = *best;
    w.trace.push_back("oracle: exhaustive search over subsets of V - {s,t}");
    return w;
}

std::optional<Witness> maxmin_oct_bruteforce(const Graph& g, int k, const Limits& limits) {
    VertexSet best = max_minimal_oct(g, limits);
    if (static_cast<int>(best.size()) < k) return std::nullopt;
    Witness w;
    w.kind = WitnessKind::minimal_oct;
    w.k = k;
    w.solution = std::move(best);
    w.trace.push_back("oracle: exhaustive search over subsets of V");
    return w;
}

bool is_witnessing_separation(const Graph& g, const Separation& sep, int q, int k) {
    const VertexSet all = g.vertices();
    if ((sep.x_side | sep.y_side) != all) return false;
    const VertexSet x_only = sep.x_side - sep.y_side;
    const VertexSet y_only = sep.y_side - sep.x_side;
    if (neighborhood(g, x_only).intersects(y_only)) return false;
    return static_cast<int>(sep.order()) <= k && static_cast<int>(x_only.size()) >= q &&
           static_cast<int>(y_only.size()) >= q;
}

BreakabilityVerdict breakability_witness(const Graph& g, int q, int k, const Limits& limits) {
    require_desk_scale(g, limits, "breakability_witness");
    if (q < 1 || k < 0) throw ContractViolation("breakability_witness: need q >= 1 and k >= 0");
    const MaskGraph mg(g);
    const auto pool = pool_without(g.n(), {});
    BreakabilityVerdict verdict;
    for (int size = 0; size <= std::min(k, g.n()); ++size) {
        const int hi = g.n() - size - q;  // a group of total in [q, hi] leaves >= q on the other side
        if (hi < q) break;
        const bool found = for_each_subset_of_size(pool, size, [&](Mask z) {
            std::vector<Mask> comps;
            Mask left = mg.all() & ~z;
            while (left != 0) {
                const Mask c = mg.reach(left & (~left + 1), mg.all() & ~z);
                comps.push_back(c);
                left &= ~c;
            }
            // reachable[i] = sums attainable with the first i components (bit j = sum j).
            std::vector<Mask> reachable_sums(comps.size() + 1, 0);
            reachable_sums[0] = 1;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                const int w = std::popcount(comps[i]);
                reachable_sums[i + 1] = reachable_sums[i] | (reachable_sums[i] << w);
            }
            int target = -1;
            for (int sum = q; sum <= hi; ++sum) {
                if ((reachable_sums.back() >> sum) & 1U) {
                    target = sum;
                    break;
                }
            }
            if (target < 0) return false;
            Mask group = 0;
            for (std::size_t i = comps.size(); i > 0; --i) {
                if (((reachable_sums[i - 1] >> target) & 1U) == 0) {
                    group |= comps[i - 1];
                    target -= std::popcount(comps[i - 1]);
                }
            }
            Separation sep{to_set(group | z), to_set((mg.all() & ~group) | z)};
            verdict.breakable = true;
            verdict.witness = std::move(sep);
            return true;
        });
        if (found) break;
    }
    return verdict;
}

std::optional<std::vector<Vertex>> induced_st_path_through(const Graph& g, Vertex s, Vertex t, Vertex v,
                                                           const Limits& limits) {
    require_desk_scale(g, limits, "induced_st_path_through");
    require_vertex(g, s, "induced_st_path_through");
    require_vertex(g, t, "induced_st_path_through");
    require_vertex(g, v, "induced_st_path_through");
    if (s == t || s == v || t == v) throw ContractViolation("induced_st_path_through: s, t, v must be distinct");
    const MaskGraph mg(g);
    std::vector<Vertex> path{s};
    // blocked: closed neighbourhoods of every path vertex except the last.
    auto dfs = [&](auto&& self, Mask on_path, Mask blocked) -> bool {
        const Vertex last = path.back();
        if ((blocked & bit(t)) != 0) return false;
        if ((on_path & bit(v)) == 0 && (blocked & bit(v)) != 0) return false;
        const Mask next_blocked = blocked | mg.adj[last] | bit(last);
        for (Mask cand = mg.adj[last] & ~blocked & ~on_path; cand != 0; cand &= cand - 1) {
            const Vertex w = std::countr_zero(cand);
            path.push_back(w);
            if (w == t) {
                if ((on_path & bit(v)) != 0) return true;
            } else if (self(self, on_path | bit(w), next_blocked)) {
                return true;
            }
            path.pop_back();
        }
        return false;
    };
    if (dfs(dfs, bit(s), 0)) return path;
    return std::nullopt;
}

std::optional<CycleRecord> induced_odd_cycle_through(const Graph& g, Vertex v, const Limits& limits) {
    require_desk_scale(g, limits, "induced_odd_cycle_through");
    require_vertex(g, v, "induced_odd_cycle_through");
    const MaskGraph mg(g);
    std::vector<Vertex> path{v};
    // Grows chordless paths v = p0, p1, ..., closing when a new vertex touches v.
    // blocked: closed neighbourhoods of p1..p_{m-1}.
    auto dfs = [&](auto&& self, Mask on_path, Mask blocked) -> bool {
        const Vertex last = path.back();
        const std::size_t m = path.size() - 1;
        const Mask next_blocked = m >= 1 ? (blocked | mg.adj[last] | bit(last)) : blocked;
        for (Mask cand = mg.adj[last] & ~blocked & ~on_path; cand != 0; cand &= cand - 1) {
            const Vertex w = std::countr_zero(cand);
            path.push_back(w);
            if (m >= 1 && (mg.adj[v] & bit(w)) != 0) {
                if (path.size() % 2 == 1) return true;
            } else if (self(self, on_path | bit(w), next_blocked)) {
                return true;
            }
            path.pop_back();
        }
        return false;
    };
    if (dfs(dfs, bit(v), 0)) return CycleRecord{path};
    return std::nullopt;
}

}  // namespace maxminsep::oracle
