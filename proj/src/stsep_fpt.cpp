#include "maxminsep/stsep_fpt.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "maxminsep/errors.hpp"

namespace maxminsep {

namespace {

std::string id(Vertex v) { return std::to_string(v + 1); }

void ensure_valid(const Graph& g, const BranchState& state, const char* where) {
    if (auto why = validate(g, state); !why.empty())
        throw std::logic_error(std::string(where) + ": branch state invariant broken: " + why);
}

Witness finish_witness(const Graph& g, const BranchState& state, Witness w, const char* rule) {
    w.k = state.k;
    w.s = state.s;
    w.t = state.t;
    if (!is_minimal_st_separator(g, state.s, state.t, w.solution))
        throw std::logic_error(std::string(rule) + " produced a set that is not a minimal st-separator");
    return w;
}

// Red-1 on one side: a vertex of N(own) that cannot reach `other` once the
// rest of N(own) and `own` itself are removed.
std::optional<Vertex> red1_candidate(const Graph& g, const VertexSet& own, const VertexSet& other) {
    const VertexSet n_own = neighborhood(g, own);
    const VertexSet base = g.vertices() - own - n_own;
    for (Vertex v : n_own) {
        const VertexSet region = base.with(v);
        if (!reachable(g, region, VertexSet{v}).intersects(other)) return v;
    }
    return std::nullopt;
}

struct Search {
    const Graph& g;
    const SolverOptions& options;
    std::vector<Vertex> order;

    StSepResult run(const BranchState& state, int depth, const std::vector<std::string>& path) const {
        StSepResult result;
        result.counters.nodes = 1;
        result.counters.max_depth = depth;
        if (options.check_invariants) {
            ensure_valid(g, state, "branch");
            if (depth > 2 * state.q) throw std::logic_error("branching depth exceeded 2q");
        }

        auto red = apply_reductions(g, state, result.counters, options);
        if (red.kind != ReductionOutcome::Kind::proceed) {
            if (depth > 0) result.counters.branch_leaves = 1;
            if (red.kind == ReductionOutcome::Kind::yes) {
                result.verdict = Verdict::yes;
                Witness w = std::move(*red.witness);
                std::vector<std::string> trace = path;
                trace.insert(trace.end(), red.trace.begin(), red.trace.end());
                trace.insert(trace.end(), w.trace.begin(), w.trace.end());
                w.trace = std::move(trace);
                result.witness = std::move(w);
            } else {
                result.verdict = red.kind == ReductionOutcome::Kind::no ? Verdict::no : Verdict::promise_violation;
            }
            return result;
        }

        const BranchState& cur = red.state;
        const bool grow_s = cur.s_side.size() <= cur.t_side.size();
        const VertexSet n_s = neighborhood(g, cur.s_side);
        const VertexSet n_t = neighborhood(g, cur.t_side);
        const VertexSet candidates = grow_s ? n_s - n_t : n_t - n_s;
        result.counters.branchings = 1;
        if (options.check_invariants &&
            (candidates.empty() || static_cast<int>(candidates.size()) > std::max(cur.k - 1, 0)))
            throw std::logic_error("branching factor outside [1, k-1]");

        std::vector<std::string> here = path;
        here.insert(here.end(), red.trace.begin(), red.trace.end());
        auto child_state = [&](Vertex x) {
            BranchState child = cur;
            (grow_s ? child.s_side : child.t_side).insert(x);
            return child;
        };
        auto child_path = [&](Vertex x) {
            auto p = here;
            p.push_back(std::string("branch ") + (grow_s ? "S" : "T") + "+=" + id(x) + " of " +
                        candidates.to_string());
            return p;
        };

        const auto xs = candidates.to_vector();
        std::vector<StSepResult> children;
        if (options.jobs > 1 && depth == 0 && xs.size() > 1) {
            std::vector<std::future<StSepResult>> pending;
            for (Vertex x : xs)
                pending.push_back(std::async(std::launch::async, [this, &child_state, &child_path, x, depth] {
                    return run(child_state(x), depth + 1, child_path(x));
                }));
            for (auto& f : pending) children.push_back(f.get());
        } else {
            for (Vertex x : xs) {
                children.push_back(run(child_state(x), depth + 1, child_path(x)));
                if (children.back().verdict == Verdict::yes) break;
            }
        }

        result.verdict = Verdict::no;
        for (auto& child : children) {
            result.counters += child.counters;
            if (result.verdict == Verdict::yes) continue;
            if (child.verdict == Verdict::yes) {
                result.verdict = Verdict::yes;
                result.witness = std::move(child.witness);
            } else if (child.verdict == Verdict::promise_violation) {
                result.verdict = Verdict::promise_violation;
            }
        }
        return result;
    }
};

}  // namespace

int BranchState::measure() const {
    return q - static_cast<int>(std::min(s_side.size(), t_side.size()));
}

std::string validate(const Graph& g, const BranchState& st) {
    if (!st.s_side.contains(st.s)) return "s not in S";
    if (!st.t_side.contains(st.t)) return "t not in T";
    if (st.s_side.bound() > g.n() || st.t_side.bound() > g.n()) return "vertex id out of range";
    if (st.s_side.intersects(st.t_side)) return "S and T overlap";
    if (!is_connected(g, st.s_side)) return "G[S] disconnected";
    if (!is_connected(g, st.t_side)) return "G[T] disconnected";
    if (neighborhood(g, st.s_side).intersects(st.t_side)) return "edge between S and T";
    return {};
}

StSepCounters& StSepCounters::operator+=(const StSepCounters& o) {
    nodes += o.nodes;
    branch_leaves += o.branch_leaves;
    branchings += o.branchings;
    max_depth = std::max(max_depth, o.max_depth);
    red1 += o.red1;
    red2 += o.red2;
    red3 += o.red3;
    red4 += o.red4;
    red5 += o.red5;
    return *this;
}

ReductionOutcome apply_reductions(const Graph& g, const BranchState& state, StSepCounters& counters,
                                  const SolverOptions& options) {
    if (auto why = validate(g, state); !why.empty()) throw ContractViolation("apply_reductions: " + why);
    using Kind = ReductionOutcome::Kind;
    ReductionOutcome out;
    out.state = state;
    BranchState& st = out.state;
    const auto order = extension_order(g.n(), options.extension_seed);

    while (true) {
        const VertexSet n_s = neighborhood(g, st.s_side);
        const VertexSet n_t = neighborhood(g, st.t_side);
        const SeparatorCertificate cert{st.s, st.t, st.s_side, st.t_side};

        if (st.measure() <= 0) {
            ++counters.red4;
            out.trace.push_back("red4 measure=" + std::to_string(st.measure()) + " S=" + st.s_side.to_string() +
                                " T=" + st.t_side.to_string());
            Witness w = extend_separator_certificate(g, cert, ExtensionRequest{}, order);
            if (static_cast<int>(w.solution.size()) < st.k) {
                out.kind = Kind::promise_violation;
                out.trace.push_back("red4 extension has size " + std::to_string(w.solution.size()) + " < k");
                return out;
            }
            out.kind = Kind::yes;
            out.witness = finish_witness(g, st, std::move(w), "red4");
            return out;
        }

        const VertexSet common = n_s & n_t;
        if (static_cast<int>(common.size()) >= st.k) {
            ++counters.red3;
            out.trace.push_back("red3 N(S)&N(T)=" + common.to_string());
            out.kind = Kind::yes;
            out.witness =
                finish_witness(g, st, extend_separator_certificate(g, cert, ExtensionRequest{common}, order), "red3");
            return out;
        }

        if (auto v = red1_candidate(g, st.s_side, st.t_side)) {
            ++counters.red1;
            st.s_side.insert(*v);
            out.trace.push_back("red1 S+=" + id(*v));
            if (options.check_invariants) ensure_valid(g, st, "red1");
            continue;
        }
        if (auto v = red1_candidate(g, st.t_side, st.s_side)) {
            ++counters.red1;
            st.t_side.insert(*v);
            out.trace.push_back("red1 T+=" + id(*v));
            if (options.check_invariants) ensure_valid(g, st, "red1");
            continue;
        }

        if (options.check_invariants) {
            if (!is_minimal_set_separator(g, st.s_side, st.t_side, n_s) ||
                !is_minimal_set_separator(g, st.s_side, st.t_side, n_t))
                throw std::logic_error("N(S) or N(T) is not a minimal ST-separator after Red-1");
        }

        if (static_cast<int>(n_s.size()) >= st.k || static_cast<int>(n_t.size()) >= st.k) {
            ++counters.red2;
            const bool use_s = static_cast<int>(n_s.size()) >= st.k;
            out.trace.push_back(std::string("red2 ") + (use_s ? "N(S)=" : "N(T)=") +
                                (use_s ? n_s : n_t).to_string());
            Witness w;
            w.kind = WitnessKind::minimal_st_separator;
            w.solution = use_s ? n_s : n_t;
            out.kind = Kind::yes;
            out.witness = finish_witness(g, st, std::move(w), "red2");
            return out;
        }

        if ((n_s - n_t).empty() || (n_t - n_s).empty()) {
            ++counters.red5;
            out.trace.push_back("red5 N(S)-N(T) or N(T)-N(S) empty");
            out.kind = Kind::no;
            return out;
        }
        return out;
    }
}

StSepResult branch(const Graph& g, const BranchState& state, const SolverOptions& options) {
    if (auto why = validate(g, state); !why.empty()) throw ContractViolation("branch: " + why);
    if (state.k < 1 || state.q < 1) throw ContractViolation("branch: need k >= 1 and q >= 1");
    const Search search{g, options, extension_order(g.n(), options.extension_seed)};
    return search.run(state, 0, {});
}

StSepResult solve_unbreakable_stsep(const Graph& g, Vertex s, Vertex t, int k, int q, bool verify_promise,
                                    const SolverOptions& options) {
    if (!g.valid(s) || !g.valid(t)) throw ContractViolation("solve_unbreakable_stsep: vertex id out of range");
    if (s == t) throw ContractViolation("solve_unbreakable_stsep: s == t");
    if (k < 1 || q < 1) throw ContractViolation("solve_unbreakable_stsep: need k >= 1 and q >= 1");
    StSepResult result;
    if (g.adjacent(s, t)) return result;
    if (verify_promise && oracle::breakability_witness(g, q, k, options.oracle_limits).breakable) {
        result.verdict = Verdict::promise_violation;
        return result;
    }
    BranchState init{s, t, VertexSet{s}, VertexSet{t}, k, q};
    return branch(g, init, options);
}

}  // namespace maxminsep
