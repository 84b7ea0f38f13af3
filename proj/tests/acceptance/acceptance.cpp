// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "graph_catalog.hpp"
#include "random_certificates.hpp"
#include "maxminsep/certificates.hpp"
#include "maxminsep/graph.hpp"
#include "maxminsep/oct_fpt.hpp"
#include "maxminsep/oracle.hpp"
#include "maxminsep/reductions.hpp"
#include "maxminsep/stsep_fpt.hpp"
#include "maxminsep/sunflower.hpp"

using namespace maxminsep;
namespace ts = testsupport;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures, keeping the first few examples for the report.
class Tally {
public:
    void fail(const std::string& what) {
        ++failures_;
        if (examples_.size() < 3) examples_.push_back(what);
    }
    std::uint64_t failures() const { return failures_; }
    std::string examples() const {
        std::string out;
        for (const auto& e : examples_) out += "\n    e.g. " + e;
        return out;
    }

private:
    std::uint64_t failures_ = 0;
    std::vector<std::string> examples_;
};

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.n() << " E={";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << u + 1 << "-" << v + 1;
        first = false;
    }
    os << "}";
    return os.str();
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<Graph> connected_upto(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (const Graph& g : ts::connected_graphs(n)) out.push_back(g);
    return out;
}

Outcome finish(const Tally& t, const std::string& counts) {
    Outcome o;
    o.pass = t.failures() == 0;
    o.detail = counts + (t.failures() ? ", " + std::to_string(t.failures()) + " failures" + t.examples() : "");
    return o;
}

// Criteria 1 and 2 share one run.
struct StSepRun {
    Tally equivalence;
    Tally bounds;
    std::uint64_t instances = 0;
    std::uint64_t yes = 0;
    std::uint64_t max_leaves = 0;
    int max_depth = 0;
};

StSepRun run_stsep() {
    StSepRun run;
    auto corpus = connected_upto(3, 7);
    const auto extra = ts::random_graphs(500, 3, 10, 0x5eed0001);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    SolverOptions opts;
    opts.check_invariants = true;

    for (const Graph& g : corpus)
        for (int q = 1; q <= 3; ++q)
            for (int k = 1; k <= 3; ++k) {
                if (oracle::breakability_witness(g, q, k).breakable) continue;
                for (Vertex s = 0; s < g.n(); ++s)
                    for (Vertex t = 0; t < g.n(); ++t) {
                        if (s == t || g.adjacent(s, t)) continue;
                        ++run.instances;
                        const std::string where = describe(g) + " s=" + std::to_string(s + 1) +
                                                  " t=" + std::to_string(t + 1) + " q=" + std::to_string(q) +
                                                  " k=" + std::to_string(k);
                        StSepResult r;
                        try {
                            r = solve_unbreakable_stsep(g, s, t, k, q, false, opts);
                        } catch (const std::exception& e) {
                            run.equivalence.fail(where + " threw " + e.what());
                            continue;
                        }
                        const bool expect = oracle::maxmin_stsep_bruteforce(g, s, t, k).has_value();
                        if (r.verdict == Verdict::yes) ++run.yes;
                        if ((r.verdict == Verdict::yes) != expect || r.verdict == Verdict::promise_violation)
                            run.equivalence.fail(where + " verdict " + to_string(r.verdict) + ", oracle " +
                                                 (expect ? "yes" : "no"));
                        if (r.verdict == Verdict::yes &&
                            (!r.witness || static_cast<int>(r.witness->solution.size()) < k ||
                             !is_minimal_st_separator(g, s, t, r.witness->solution)))
                            run.equivalence.fail(where + " witness rejected");

                        run.max_leaves = std::max(run.max_leaves, r.counters.branch_leaves);
                        run.max_depth = std::max(run.max_depth, r.counters.max_depth);
                        const std::uint64_t bound = ipow(static_cast<std::uint64_t>(k - 1), 2 * q);
                        if (r.counters.branch_leaves > bound || r.counters.max_depth > 2 * q)
                            run.bounds.fail(where + " leaves=" + std::to_string(r.counters.branch_leaves) +
                                            " depth=" + std::to_string(r.counters.max_depth));
                    }
            }
    return run;
}

Outcome criterion3() {
    Tally t;
    auto corpus = connected_upto(1, 7);
    const auto extra = ts::random_graphs(300, 3, 10, 0x5eed0003);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
    SolverOptions opts;
    opts.check_invariants = true;
    std::uint64_t instances = 0, yes = 0;
    std::map<std::string, std::uint64_t> routes;
    for (const Graph& g : corpus)
        for (int k = 1; k <= 3; ++k) {
            if (oracle::breakability_witness(g, 1, 2 * k).breakable) continue;
            ++instances;
            const std::string where = describe(g) + " k=" + std::to_string(k);
            OctResult r;
            try {
                r = solve_unbreakable_oct(g, k, 1, true, false, opts);
            } catch (const std::exception& e) {
                t.fail(where + " threw " + e.what());
                continue;
            }
            ++routes[r.route];
            const bool expect = oracle::maxmin_oct_bruteforce(g, k).has_value();
            if (r.verdict == Verdict::yes) ++yes;
            if ((r.verdict == Verdict::yes) != expect || r.verdict == Verdict::promise_violation)
                t.fail(where + " verdict " + to_string(r.verdict) + " via " + r.route + ", oracle " +
                       (expect ? "yes" : "no"));
            if (r.verdict == Verdict::yes &&
                (!r.witness || static_cast<int>(r.witness->solution.size()) < k ||
                 !is_minimal_oct(g, r.witness->solution)))
                t.fail(where + " witness rejected");
        }
    std::string route_list;
    for (const auto& [name, count] : routes) route_list += " " + name + "=" + std::to_string(count);
    return finish(t, std::to_string(instances) + " instances, " + std::to_string(yes) + " yes; routes:" + route_list);
}

Outcome criterion4() {
    Tally t;
    std::mt19937_64 rng(0x5eed0004);
    int separators = 0;
    while (separators < 1000) {
        auto c = ts::random_separator_case(rng);
        if (!c) continue;
        ++separators;
        if (!check_separator_certificate(c->g, c->cert, c->req)) {
            t.fail("generator produced an invalid separator certificate on " + describe(c->g));
            continue;
        }
        const Witness w = extend_separator_certificate(c->g, c->cert, c->req, c->order);
        if (!is_minimal_st_separator(c->g, c->cert.s, c->cert.t, w.solution) || !(c->req.forced - w.solution).empty())
            t.fail("separator extension on " + describe(c->g) + " gave " + w.solution.to_string());
    }
    for (int i = 0; i < 1000; ++i) {
        auto c = ts::random_oct_case(rng);
        if (!check_oct_certificate(c.g, c.cert, c.req)) {
            t.fail("generator produced an invalid oct certificate on " + describe(c.g));
            continue;
        }
        const Witness w = extend_oct_certificate(c.g, c.cert, c.req, c.order);
        if (!is_minimal_oct(c.g, w.solution) || !(c.req.forced - w.solution).empty())
            t.fail("oct extension on " + describe(c.g) + " gave " + w.solution.to_string());
    }
    return finish(t, "1000 separator and 1000 oct tuples");
}

Outcome criterion5() {
    Tally t;
    std::uint64_t triples = 0, positive = 0;
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : ts::all_graphs(n))
            for (Vertex s = 0; s < n; ++s)
                for (Vertex u = 0; u < n; ++u) {
                    if (u == s) continue;
                    VertexSet in_some;
                    for (const auto& z : oracle::enumerate_minimal_st_separators(g, s, u)) in_some |= z;
                    for (Vertex v = 0; v < n; ++v) {
                        if (v == s || v == u) continue;
                        ++triples;
                        const bool path = oracle::exists_induced_st_path_through(g, s, u, v);
                        if (path) ++positive;
                        if (path != in_some.contains(v))
                            t.fail(describe(g) + " s=" + std::to_string(s + 1) + " t=" + std::to_string(u + 1) +
                                   " v=" + std::to_string(v + 1));
                    }
                }
    return finish(t, std::to_string(triples) + " triples, " + std::to_string(positive) + " with a path");
}

Outcome criterion6() {
    Tally t;
    std::uint64_t checks = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : ts::all_graphs(n)) {
            VertexSet on_cycle;
            for (const auto& c : ts::chordless_odd_cycle_sets(g)) on_cycle |= c;
            for (Vertex v = 0; v < n; ++v) {
                if (on_cycle.contains(v)) continue;
                const Graph minus = induced_subgraph(g, g.vertices() - VertexSet{v}).graph;
                for (int k = 1; k <= 3; ++k) {
                    ++checks;
                    if (oracle::maxmin_oct_bruteforce(g, k).has_value() !=
                        oracle::maxmin_oct_bruteforce(minus, k).has_value())
                        t.fail(describe(g) + " v=" + std::to_string(v + 1) + " k=" + std::to_string(k));
                }
            }
        }
    return finish(t, std::to_string(checks) + " (graph, v, k) checks");
}

Outcome criterion7() {
    Tally t;
    std::uint64_t checks = 0, graphs = 0;
    for (int n = 3; n <= 8; ++n)
        for (const Graph& g : ts::connected_graphs(n)) {
            if (!is_bipartite(g, g.vertices())) continue;
            ++graphs;
            for (Vertex s = 0; s < n; ++s)
                for (Vertex u = s + 1; u < n; ++u) {
                    if (g.adjacent(s, u)) continue;
                    for (int k = 2; k <= 3; ++k) {
                        ++checks;
                        const auto r = stsep_to_oct(g, s, u, k);
                        const bool before = oracle::maxmin_stsep_bruteforce(g, s, u, k).has_value();
                        const bool after = oracle::maxmin_oct_bruteforce(r.output_graph, r.k_out).has_value();
                        if (before != after)
                            t.fail(describe(g) + " s=" + std::to_string(s + 1) + " t=" + std::to_string(u + 1) +
                                   " k=" + std::to_string(k) + " case=" + to_string(r.case_tag));
                    }
                }
        }
    return finish(t, std::to_string(graphs) + " bipartite graphs, " + std::to_string(checks) + " checks");
}

std::uint64_t binomial(int n, int r) {
    std::uint64_t b = 1;
    for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return b;
}

Outcome criterion8() {
    Tally t;
    std::mt19937_64 rng(0x5eed0008);
    std::uint64_t min_petals = UINT64_MAX;
    for (int i = 0; i < 200; ++i) {
        const int d = 2 + i % 3;
        const int k = 2 + (i / 3) % 2;
        const std::uint64_t size = family_bound(d, k) / static_cast<std::uint64_t>(d) + 1;
        int universe = d;
        while (binomial(universe, d) < 2 * size) ++universe;
        universe += static_cast<int>(rng() % 6);
        std::vector<Vertex> pool(static_cast<std::size_t>(universe));
        for (int v = 0; v < universe; ++v) pool[static_cast<std::size_t>(v)] = v;
        std::set<VertexSet> seen;
        std::vector<VertexSet> family;
        while (family.size() < size) {
            std::shuffle(pool.begin(), pool.end(), rng);
            VertexSet s = VertexSet::from(std::vector<Vertex>(pool.begin(), pool.begin() + d));
            if (seen.insert(s).second) family.push_back(std::move(s));
        }
        const std::string where = "d=" + std::to_string(d) + " k=" + std::to_string(k) + " family #" +
                                  std::to_string(i);
        const auto sf = find_sunflower(family, k);
        if (!sf) {
            t.fail(where + " returned none");
            continue;
        }
        bool ok = static_cast<int>(sf->members.size()) >= k && sf->petals.size() == sf->members.size();
        for (std::size_t a = 0; ok && a < sf->members.size(); ++a) {
            ok = seen.count(sf->members[a]) == 1 && sf->petals[a] == sf->members[a] - sf->core;
            for (std::size_t b = a + 1; ok && b < sf->members.size(); ++b)
                ok = (sf->members[a] & sf->members[b]) == sf->core;
        }
        if (!ok) t.fail(where + " returned a non-sunflower");
        min_petals = std::min<std::uint64_t>(min_petals, sf->members.size());
    }
    return finish(t, "200 families, fewest petals returned " + std::to_string(min_petals));
}

Outcome criterion9() {
    Tally t;
    std::uint64_t graphs = 0, odd = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : ts::all_graphs(n)) {
            ++graphs;
            const auto c = shortest_odd_cycle(g, g.vertices());
            const int expect = ts::min_simple_odd_cycle_length(g);
            const int got = c ? static_cast<int>(c->length()) : 0;
            if (c) ++odd;
            if (got != expect)
                t.fail(describe(g) + " length " + std::to_string(got) + ", expected " + std::to_string(expect));
            else if (c && !is_chordless_odd_cycle(g, *c))
                t.fail(describe(g) + " returned cycle has a chord");
        }
    return finish(t, std::to_string(graphs) + " graphs, " + std::to_string(odd) + " non-bipartite");
}

Outcome criterion10() {
    using O = VertexClassification::Outcome;
    constexpr int d = 4, k = 2;
    const std::uint64_t guess_bound = 1u << (d - 1);
    const std::uint64_t iteration_bound = family_bound(d, k);
    Tally iff, payload, counters;
    std::uint64_t pairs = 0, missed = 0, spurious = 0;
    std::map<std::string, std::uint64_t> outcomes;
    std::uint64_t max_guesses = 0, max_iterations = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : ts::all_graphs(n)) {
            VertexSet on_cycle;
            for (const auto& c : ts::chordless_odd_cycle_sets(g)) on_cycle |= c;
            for (Vertex x = 0; x < n; ++x) {
                ++pairs;
                const std::string where = describe(g) + " x=" + std::to_string(x + 1);
                const auto r = classify_vertex(g, x, d, k);
                ++outcomes[to_string(r.outcome)];
                const bool through = on_cycle.contains(x);
                if ((r.outcome == O::no_cycle_through_x) != !through) {
                    if (through) {
                        ++missed;
                    } else {
                        ++spurious;
                    }
                    iff.fail(where + " outcome " + to_string(r.outcome) + ", chordless odd cycle through x: " +
                             (through ? "yes" : "no"));
                }
                switch (r.outcome) {
                case O::cycle_through_x:
                    if (!r.cycle || !r.cycle->contains(x) || !is_chordless_odd_cycle(g, *r.cycle))
                        payload.fail(where + " bad cycle-through-x payload");
                    break;
                case O::long_cycle:
                    if (!r.cycle || r.cycle->contains(x) || static_cast<int>(r.cycle->length()) < d ||
                        !is_chordless_odd_cycle(g, *r.cycle))
                        payload.fail(where + " bad long-cycle payload");
                    break;
                case O::large_family: {
                    std::set<VertexSet> distinct;
                    bool ok = r.family.size() >= iteration_bound;
                    for (const auto& c : r.family) {
                        ok = ok && is_chordless_odd_cycle(g, c) && static_cast<int>(c.length()) < d && !c.contains(x);
                        distinct.insert(c.vertex_set());
                    }
                    if (!ok || distinct.size() != r.family.size()) payload.fail(where + " bad large-family payload");
                    break;
                }
                case O::no_cycle_through_x:
                    break;
                }
                max_guesses = std::max(max_guesses, r.counters.max_guesses_per_step);
                max_iterations = std::max(max_iterations, r.counters.max_iterations_per_branch);
                if (r.counters.max_guesses_per_step > guess_bound ||
                    r.counters.max_iterations_per_branch > iteration_bound)
                    counters.fail(where + " guesses=" + std::to_string(r.counters.max_guesses_per_step) +
                                  " iterations=" + std::to_string(r.counters.max_iterations_per_branch));
            }
        }
    Outcome o;
    o.pass = iff.failures() == 0 && payload.failures() == 0 && counters.failures() == 0;
    std::string outcome_list;
    for (const auto& [name, count] : outcomes) outcome_list += " " + name + "=" + std::to_string(count);
    o.detail = std::to_string(pairs) + " (graph, x) pairs;" + outcome_list +
               "\n    iff: " + std::to_string(iff.failures()) + " mismatches (no-cycle-through-x while a cycle exists: " +
               std::to_string(missed) + "; outcomes 1-3 while none exists: " + std::to_string(spurious) + ")" +
               iff.examples() + "\n    payloads: " + std::to_string(payload.failures()) + " failures" +
               payload.examples() + "\n    counters: max guesses " + std::to_string(max_guesses) + " (bound " +
               std::to_string(guess_bound) + "), max iterations " + std::to_string(max_iterations) + " (bound " +
               std::to_string(iteration_bound) + "), " + std::to_string(counters.failures()) + " failures" +
               counters.examples();
    return o;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("uncaught exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("criterion %2d %s  %s (%.1fs): %s\n", id, o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
        std::fflush(stdout);
    };

    StSepRun stsep;
    report(1, "st-separator oracle equivalence", [&] {
        stsep = run_stsep();
        return finish(stsep.equivalence,
                      std::to_string(stsep.instances) + " instances, " + std::to_string(stsep.yes) + " yes");
    });
    report(2, "search-tree bound", [&] {
        return finish(stsep.bounds, std::to_string(stsep.instances) + " instances, max leaves " +
                                        std::to_string(stsep.max_leaves) + ", max depth " +
                                        std::to_string(stsep.max_depth));
    });
    report(3, "oct oracle equivalence", criterion3);
    report(4, "certificate extension soundness", criterion4);
    report(5, "induced path through v iff v in a minimal st-separator", criterion5);
    report(6, "deleting vertices off chordless odd cycles", criterion6);
    report(7, "st-separator to oct reduction", criterion7);
    report(8, "sunflower bound", criterion8);
    report(9, "shortest odd cycle", criterion9);
    report(10, "classify_vertex soundness", criterion10);

    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
