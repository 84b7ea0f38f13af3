#include "maxminsep/oct_fpt.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "maxminsep/errors.hpp"
#include "maxminsep/oracle.hpp"

namespace maxminsep {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::string id(Vertex v) { return std::to_string(v + 1); }

std::string cycle_string(const CycleRecord& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) out += (i ? "," : "") + id(c.vertices[i]);
    return out + ")";
}

// Proper subsets of `f`, by size and then lexicographically.
std::vector<VertexSet> proper_subsets(const VertexSet& f) {
    const auto elems = f.to_vector();
    const std::size_t total = std::size_t{1} << elems.size();
    std::vector<VertexSet> out;
    out.reserve(total - 1);
    for (std::size_t mask = 0; mask + 1 < total; ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (mask >> i & 1) s.insert(elems[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

struct Classifier {
    const Graph& g;
    Vertex x;
    int d;
    std::uint64_t bound;
    ClassifyCounters counters;
    std::vector<CycleRecord> family;
    std::set<std::pair<std::size_t, VertexSet>> exhausted;

    // Fills `out` and returns true on outcomes 1-3.
    bool search(const VertexSet& working, VertexClassification& out) {
        if (exhausted.count({family.size(), working})) {
            ++counters.memo_hits;
            return false;
        }
        ++counters.nodes;
        auto f = shortest_odd_cycle(g, working);
        if (!f) {
            exhausted.insert({family.size(), working});
            return false;
        }
        using O = VertexClassification::Outcome;
        if (f->contains(x)) {
            out.outcome = O::cycle_through_x;
            out.cycle = std::move(*f);
            return true;
        }
        if (static_cast<int>(f->length()) >= d) {
            out.outcome = O::long_cycle;
            out.cycle = std::move(*f);
            return true;
        }
        family.push_back(*f);
        counters.max_iterations_per_branch =
            std::max<std::uint64_t>(counters.max_iterations_per_branch, family.size());
        if (family.size() >= bound) {
            out.outcome = O::large_family;
            out.family = family;
            return true;
        }
        const VertexSet vf = f->vertex_set();
        const auto guesses = proper_subsets(vf);
        counters.max_guesses_per_step = std::max<std::uint64_t>(counters.max_guesses_per_step, guesses.size());
        for (const auto& kept : guesses) {
            if (search(working - (vf - kept), out)) return true;
        }
        family.pop_back();
        exhausted.insert({family.size(), working});
        return false;
    }
};

VertexSet growth_base(const LongCycleGrowthState& st, Vertex extra) {
    return (st.s_path | st.t_path).with(extra);
}

Witness verified_oct(const Graph& g, Witness w, int k, const char* where) {
    w.k = k;
    if (static_cast<int>(w.solution.size()) < k)
        throw std::logic_error(std::string(where) + ": extension smaller than k");
    if (!is_minimal_oct(g, w.solution)) throw std::logic_error(std::string(where) + ": result is not a minimal oct");
    return w;
}

}  // namespace

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t saturating_factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r = saturating_mul(r, static_cast<std::uint64_t>(i));
    return r;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = saturating_mul(r, base);
    return r;
}

std::uint64_t family_bound(int d, int k) {
    return saturating_mul(saturating_mul(static_cast<std::uint64_t>(d), saturating_factorial(d)),
                          saturating_pow(static_cast<std::uint64_t>(k - 1), d));
}

std::uint64_t oct_size_cutoff(int k, int q) {
    const int d = 2 * q + 2;
    return saturating_mul(static_cast<std::uint64_t>(d), family_bound(d, k));
}

const char* to_string(VertexClassification::Outcome o) {
    using O = VertexClassification::Outcome;
    switch (o) {
        case O::cycle_through_x: return "cycle-through-x";
        case O::long_cycle: return "long-cycle";
        case O::large_family: return "large-family";
        case O::no_cycle_through_x: return "no-cycle-through-x";
    }
    return "unknown";
}

VertexClassification classify_vertex(const Graph& g, Vertex x, int d, int k) {
    if (!g.valid(x)) throw ContractViolation("classify_vertex: vertex id out of range");
    if (d < 3 || k < 1) throw ContractViolation("classify_vertex: need d >= 3 and k >= 1");
    Classifier c{g, x, d, family_bound(d, k), {}, {}, {}};
    VertexClassification out;
    if (!c.search(g.vertices(), out)) out.outcome = VertexClassification::Outcome::no_cycle_through_x;
    out.counters = c.counters;
    return out;
}

std::string check_growth_invariants(const Graph& g, const LongCycleGrowthState& st, int q) {
    const VertexSet z = st.z_x | st.z_y;
    if (st.s_path.intersects(st.t_path) || st.s_path.intersects(z) || st.t_path.intersects(z))
        return "S, T and Z_x|Z_y not pairwise disjoint";
    for (const auto* side : {&st.s_path, &st.t_path}) {
        const char* name = side == &st.s_path ? "S" : "T";
        if (static_cast<int>(side->size()) < q) return std::string(name) + " smaller than q";
        if (!is_connected(g, *side)) return std::string("G[") + name + "] disconnected";
        if (!is_bipartite(g, *side)) return std::string("G[") + name + "] not bipartite";
    }
    if (!check_oct_certificate(g, OctCertificate{growth_base(st, st.y)}, ExtensionRequest{st.z_x}))
        return "S|T|{y} is not a certificate for Z_x";
    if (!check_oct_certificate(g, OctCertificate{growth_base(st, st.x)}, ExtensionRequest{st.z_y}))
        return "S|T|{x} is not a certificate for Z_y";
    for (Vertex v : {st.x, st.y}) {
        if (!g.neighbors(v).intersects(st.s_path) || !g.neighbors(v).intersects(st.t_path))
            return id(v) + " lacks a neighbour in S or T";
    }
    if (st.marked != (st.s_path | st.t_path | z)) return "marked set out of sync";
    return {};
}

LongCycleGrowth grow_from_long_cycle(const Graph& g, const CycleRecord& c, int q, int k,
                                     const SolverOptions& options) {
    if (q < 1 || k < 1) throw ContractViolation("grow_from_long_cycle: need q >= 1 and k >= 1");
    if (!is_chordless_odd_cycle(g, c)) throw ContractViolation("grow_from_long_cycle: not a chordless odd cycle");
    const int len = static_cast<int>(c.length());
    if (len < 2 * q + 2) throw ContractViolation("grow_from_long_cycle: cycle shorter than 2q+2");

    // x = c[0], y splits the rest into arcs of (len-2)/2 and the remainder.
    const int a = (len - 2) / 2;
    VertexSet arc1, arc2;
    for (int i = 1; i <= a; ++i) arc1.insert(c.vertices[i]);
    for (int i = a + 2; i < len; ++i) arc2.insert(c.vertices[i]);

    LongCycleGrowth result;
    LongCycleGrowthState& st = result.state;
    st.x = c.vertices[0];
    st.y = c.vertices[a + 1];
    const bool arc1_even_path = arc1.size() % 2 == 1;
    st.s_path = arc1_even_path ? arc1 : arc2;
    st.t_path = arc1_even_path ? arc2 : arc1;
    st.z_x = VertexSet{st.x};
    st.z_y = VertexSet{st.y};
    st.marked = st.s_path | st.t_path | st.z_x | st.z_y;

    std::vector<std::string> trace{"grow cycle=" + cycle_string(c) + " x=" + id(st.x) + " y=" + id(st.y) +
                                   " S=" + st.s_path.to_string() + " T=" + st.t_path.to_string()};
    if (options.check_invariants)
        if (auto why = check_growth_invariants(g, st, q); !why.empty()) throw std::logic_error("growth: " + why);

    while (true) {
        const VertexSet frontier = (neighborhood(g, st.s_path) | neighborhood(g, st.t_path)) - st.marked;
        if (frontier.empty()) break;
        const Vertex v = frontier.front();
        ++result.iterations;
        const bool in_s = g.neighbors(v).intersects(st.s_path);
        const bool in_t = g.neighbors(v).intersects(st.t_path);
        const VertexSet both = st.s_path | st.t_path;
        const bool odd_with_x = !is_bipartite(g, both.with(st.x).with(v));
        const bool odd_with_y = !is_bipartite(g, both.with(st.y).with(v));

        bool absorbed = false;
        if (!(in_s && in_t)) {
            VertexSet& side = in_s ? st.s_path : st.t_path;
            if (!odd_with_x && !odd_with_y && is_bipartite(g, side.with(v))) {
                side.insert(v);
                absorbed = true;
                trace.push_back(std::string(in_s ? "S" : "T") + "+=" + id(v));
            }
        }
        if (!absorbed) {
            if (!odd_with_x && !odd_with_y)
                throw std::logic_error("growth: vertex " + id(v) + " closes no odd cycle with either certificate");
            if (odd_with_x) st.z_y.insert(v);
            if (odd_with_y) st.z_x.insert(v);
            trace.push_back(std::string("route ") + id(v) + (odd_with_y ? " Z_x" : "") + (odd_with_x ? " Z_y" : ""));
        }
        st.marked.insert(v);
        if (options.check_invariants)
            if (auto why = check_growth_invariants(g, st, q); !why.empty()) throw std::logic_error("growth: " + why);
    }

    const auto order = extension_order(g.n(), options.extension_seed);
    std::optional<Witness> w;
    if (static_cast<int>(st.z_x.size()) >= k) {
        trace.push_back("extend Z_x=" + st.z_x.to_string());
        w = extend_oct_certificate(g, OctCertificate{growth_base(st, st.y)}, ExtensionRequest{st.z_x}, order);
    } else if (static_cast<int>(st.z_y.size()) >= k) {
        trace.push_back("extend Z_y=" + st.z_y.to_string());
        w = extend_oct_certificate(g, OctCertificate{growth_base(st, st.x)}, ExtensionRequest{st.z_y}, order);
    }
    if (w) {
        trace.insert(trace.end(), w->trace.begin(), w->trace.end());
        w->trace = std::move(trace);
        result.witness = verified_oct(g, std::move(*w), k, "grow_from_long_cycle");
    }
    return result;
}

std::optional<Witness> oct_from_small_cycles(const Graph& g, const std::vector<CycleRecord>& family, int d, int k,
                                             const SolverOptions& options) {
    if (k < 1) throw ContractViolation("oct_from_small_cycles: k must be positive");
    std::set<VertexSet> seen;
    std::vector<std::vector<VertexSet>> buckets(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (const auto& c : family) {
        if (!is_chordless_odd_cycle(g, c)) throw ContractViolation("oct_from_small_cycles: not a chordless odd cycle");
        if (static_cast<int>(c.length()) > d) throw ContractViolation("oct_from_small_cycles: cycle longer than d");
        if (!seen.insert(c.vertex_set()).second) throw ContractViolation("oct_from_small_cycles: repeated cycle");
        buckets[c.length()].push_back(c.vertex_set());
    }
    for (int len = 3; len <= d; ++len) {
        const auto& bucket = buckets[len];
        if (bucket.empty()) continue;
        // Above l!(k-1)^l a sunflower is guaranteed; below it one may still exist.
        const bool above = bucket.size() > saturating_mul(saturating_factorial(len),
                                                          saturating_pow(static_cast<std::uint64_t>(k - 1), len));
        auto sf = find_sunflower(bucket, k);
        if (!sf) {
            if (above) throw std::logic_error("oct_from_small_cycles: sunflower missing above the bound");
            continue;
        }
        if (!is_bipartite(g, sf->core)) throw std::logic_error("oct_from_small_cycles: sunflower core not bipartite");
        Witness w = extend_oct_certificate(g, OctCertificate{sf->core}, ExtensionRequest{},
                                           extension_order(g.n(), options.extension_seed));
        w.trace.insert(w.trace.begin(), "sunflower length=" + std::to_string(len) + " core=" + sf->core.to_string() +
                                            " petals=" + std::to_string(sf->petals.size()));
        return verified_oct(g, std::move(w), k, "oct_from_small_cycles");
    }
    return std::nullopt;
}

OctResult solve_unbreakable_oct(const Graph& g, int k, int q, bool force_fpt_path, bool verify_promise,
                                const SolverOptions& options, std::optional<std::uint64_t> cutoff_override) {
    if (k < 1 || q < 1) throw ContractViolation("solve_unbreakable_oct: need k >= 1 and q >= 1");
    const std::uint64_t cutoff = cutoff_override.value_or(oct_size_cutoff(k, q));
    const int d = 2 * q + 2;
    OctResult result;

    if (verify_promise && oracle::breakability_witness(g, q, 2 * k, options.oracle_limits).breakable) {
        result.verdict = Verdict::promise_violation;
        result.route = "promise-check";
        return result;
    }

    Graph cur = g;
    std::vector<Vertex> original(g.n());
    for (Vertex v = 0; v < g.n(); ++v) original[v] = v;
    std::vector<std::string> log;

    auto finish_yes = [&](Witness w, const char* route) {
        VertexSet lifted;
        for (Vertex v : w.solution) lifted.insert(original[v]);
        w.solution = lifted;
        w.k = k;
        log.insert(log.end(), w.trace.begin(), w.trace.end());
        w.trace = std::move(log);
        if (!is_minimal_oct(g, w.solution) || static_cast<int>(w.solution.size()) < k)
            throw std::logic_error("solve_unbreakable_oct: witness failed verification on the input graph");
        result.verdict = Verdict::yes;
        result.witness = std::move(w);
        result.route = route;
        return result;
    };
    auto brute = [&](const char* route) {
        ++result.counters.bruteforce_calls;
        auto w = oracle::maxmin_oct_bruteforce(cur, k, options.oracle_limits);
        if (w) return finish_yes(std::move(*w), route);
        result.verdict = Verdict::no;
        result.route = route;
        return result;
    };
    auto grown = [&](const CycleRecord& c) -> std::optional<OctResult> {
        auto growth = grow_from_long_cycle(cur, c, q, k, options);
        result.counters.growth_iterations += growth.iterations;
        if (growth.witness) return finish_yes(std::move(*growth.witness), "long-cycle");
        if (result.counters.deletions == 0) {
            result.verdict = Verdict::promise_violation;
            result.route = "long-cycle-insufficient";
            return result;
        }
        // Deletions may have broken unbreakability; the reduced graph has the same minimal octs.
        return brute("bruteforce-after-insufficient-growth");
    };

    while (true) {
        if (is_bipartite(cur, cur.vertices())) {
            result.verdict = Verdict::no;
            result.route = "bipartite";
            return result;
        }
        const auto n = static_cast<std::uint64_t>(cur.n());
        if (n <= cutoff && !force_fpt_path) return brute("bruteforce");
        if (verify_promise && result.counters.deletions > 0 &&
            oracle::breakability_witness(cur, q, 2 * k, options.oracle_limits).breakable)
            return brute("bruteforce-after-deletion");

        std::vector<CycleRecord> short_cycles;
        std::optional<Vertex> irrelevant;
        for (Vertex x = 0; x < cur.n() && !irrelevant; ++x) {
            auto cls = classify_vertex(cur, x, d, k);
            ++result.counters.classify_calls;
            result.counters.classify_nodes += cls.counters.nodes;
            result.counters.max_iterations_per_branch =
                std::max(result.counters.max_iterations_per_branch, cls.counters.max_iterations_per_branch);
            result.counters.max_guesses_per_step =
                std::max(result.counters.max_guesses_per_step, cls.counters.max_guesses_per_step);
            using O = VertexClassification::Outcome;
            switch (cls.outcome) {
                case O::long_cycle:
                    log.push_back("classify " + id(original[x]) + ": long cycle");
                    return *grown(*cls.cycle);
                case O::large_family: {
                    log.push_back("classify " + id(original[x]) + ": family of " + std::to_string(cls.family.size()));
                    auto w = oct_from_small_cycles(cur, cls.family, d - 1, k, options);
                    if (!w) throw std::logic_error("solve_unbreakable_oct: large family gave no sunflower");
                    return finish_yes(std::move(*w), "large-family");
                }
                case O::no_cycle_through_x:
                    irrelevant = x;
                    break;
                case O::cycle_through_x:
                    if (static_cast<int>(cls.cycle->length()) >= d) {
                        log.push_back("classify " + id(original[x]) + ": long cycle through it");
                        return *grown(*cls.cycle);
                    }
                    short_cycles.push_back(std::move(*cls.cycle));
                    break;
            }
        }

        if (irrelevant) {
            log.push_back("delete " + id(original[*irrelevant]) + " (on no chordless odd cycle)");
            ++result.counters.deletions;
            auto sub = induced_subgraph(cur, cur.vertices().without(*irrelevant));
            std::vector<Vertex> next(sub.original_id.size());
            for (std::size_t i = 0; i < next.size(); ++i) next[i] = original[sub.original_id[i]];
            cur = std::move(sub.graph);
            original = std::move(next);
            continue;
        }

        if (n > cutoff) {
            std::vector<CycleRecord> distinct;
            std::set<VertexSet> seen;
            for (auto& c : short_cycles)
                if (seen.insert(c.vertex_set()).second) distinct.push_back(std::move(c));
            log.push_back("collected " + std::to_string(distinct.size()) + " distinct short cycles");
            auto w = oct_from_small_cycles(cur, distinct, d - 1, k, options);
            if (w) return finish_yes(std::move(*w), "small-cycles");
            // Only reachable with a cutoff override below the proven bound.
            return brute("bruteforce-small-cycles-below-bound");
        }
        return brute("bruteforce-short-cycles");
    }
}

}  // namespace maxminsep
