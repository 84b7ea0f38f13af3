#include "maxminsep/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>

#include "maxminsep/errors.hpp"
#include "maxminsep/generators.hpp"
#include "maxminsep/oct_fpt.hpp"
#include "maxminsep/oracle.hpp"
#include "maxminsep/reductions.hpp"
#include "maxminsep/stsep_fpt.hpp"
#include "maxminsep/witness_json.hpp"

namespace maxminsep::cli {

namespace {

using nlohmann::json;

class HashMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunFlags {
    std::string graph;
    int jobs = 1;
    bool deterministic = false;
    std::optional<std::uint64_t> seed;
    bool unsafe_large = false;
    bool check_invariants = false;
};

void add_run_flags(CLI::App* sub, RunFlags& f) {
    sub->add_option("--graph", f.graph, "graph file")->required();
    sub->add_option("--jobs", f.jobs, "worker threads (default $MAXMINSEP_JOBS or 1)")->check(CLI::PositiveNumber);
    sub->add_flag("--deterministic", f.deterministic, "single worker, no wall time in the report");
    sub->add_option("--seed", f.seed, "seed for the greedy extension order");
    sub->add_flag("--unsafe-large", f.unsafe_large, "raise the oracle size guard to 63 vertices");
    sub->add_flag("--check-invariants", f.check_invariants, "re-check internal invariants while solving");
}

SolverOptions solver_options(const RunFlags& f) {
    SolverOptions o;
    o.jobs = f.deterministic ? 1 : f.jobs;
    o.extension_seed = f.seed;
    o.check_invariants = f.check_invariants;
    if (f.unsafe_large) o.oracle_limits.max_vertices = oracle::kHardMaxVertices;
    return o;
}

Vertex vertex_arg(const Graph& g, int one_based, const char* name) {
    if (one_based < 1 || one_based > g.n())
        throw ContractViolation(std::string("--") + name + " " + std::to_string(one_based) + " is not a vertex of the graph");
    return one_based - 1;
}

json ids(const VertexSet& s) {
    auto a = json::array();
    for (Vertex v : s) a.push_back(v + 1);
    return a;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::yes: return kExitYes;
        case Verdict::no: return kExitNo;
        case Verdict::promise_violation: return kExitPromiseViolation;
    }
    return kExitInternal;
}

json stsep_counters(const StSepCounters& c) {
    return {{"nodes", c.nodes},      {"branch_leaves", c.branch_leaves},
            {"branchings", c.branchings}, {"max_depth", c.max_depth},
            {"red1", c.red1},        {"red2", c.red2},
            {"red3", c.red3},        {"red4", c.red4},
            {"red5", c.red5}};
}

json oct_counters(const OctResult& r) {
    const auto& c = r.counters;
    return {{"route", r.route},
            {"deletions", c.deletions},
            {"classify_calls", c.classify_calls},
            {"classify_nodes", c.classify_nodes},
            {"max_iterations_per_branch", c.max_iterations_per_branch},
            {"max_guesses_per_step", c.max_guesses_per_step},
            {"growth_iterations", c.growth_iterations},
            {"bruteforce_calls", c.bruteforce_calls}};
}

struct Report {
    std::string command;
    std::vector<std::string> args;
    bool deterministic = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json base(const Graph& g) const {
        json j;
        j["command"] = command;
        j["args"] = args;
        j["instance_hash"] = graph_hash(g);
        return j;
    }

    json finish(json j) const {
        if (deterministic) {
            j["wall_time_ms"] = nullptr;
        } else {
            const auto us =
                std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
            j["wall_time_ms"] = static_cast<double>(us) / 1000.0;
        }
        return j;
    }

    json solved(const Graph& g, Verdict v, const std::optional<Witness>& w, json counters) const {
        json j = base(g);
        j["verdict"] = to_string(v);
        j["witness"] = w ? witness_to_json(*w) : json(nullptr);
        j["counters"] = std::move(counters);
        return finish(std::move(j));
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, "cannot open " + path + " for writing");
    f << text;
    if (!f) throw ParseError(0, "failed writing " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

int error_exit(const std::string& command, const std::vector<std::string>& args, int code, const std::string& kind,
               const std::string& message, std::ostream& out, std::ostream& err) {
    err << "maxminsep: " << message << "\n";
    json j;
    j["command"] = command;
    j["args"] = args;
    j["verdict"] = "error";
    j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
    out << j.dump(2) << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum minimal st-separators and odd cycle transversals on unbreakable graphs", "maxminsep"};
    app.require_subcommand(1);

    int default_jobs = 1;
    if (const char* env = std::getenv("MAXMINSEP_JOBS")) {
        try {
            default_jobs = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            err << "maxminsep: ignoring MAXMINSEP_JOBS='" << env << "'\n";
        }
    }

    // solve-stsep
    RunFlags st_flags;
    st_flags.jobs = default_jobs;
    int st_s = 0, st_t = 0, st_k = 0, st_q = 0;
    bool st_verify = false, st_oracle = false;
    auto* solve_stsep = app.add_subcommand("solve-stsep", "MaxMin minimal st-separator");
    add_run_flags(solve_stsep, st_flags);
    solve_stsep->add_option("--s", st_s, "source vertex (1-indexed)")->required();
    solve_stsep->add_option("--t", st_t, "target vertex (1-indexed)")->required();
    solve_stsep->add_option("-k", st_k, "required separator size")->required()->check(CLI::PositiveNumber);
    solve_stsep->add_option("-q", st_q, "unbreakability parameter")->required()->check(CLI::PositiveNumber);
    solve_stsep->add_flag("--verify-promise", st_verify, "check (q,k)-unbreakability with the oracle first");
    solve_stsep->add_flag("--oracle", st_oracle, "answer with the exhaustive oracle instead");

    // solve-oct
    RunFlags oct_flags;
    oct_flags.jobs = default_jobs;
    int oct_k = 0, oct_q = 0;
    bool oct_verify = false, oct_oracle = false, oct_force = false;
    std::optional<std::uint64_t> oct_cutoff;
    auto* solve_oct = app.add_subcommand("solve-oct", "MaxMin minimal odd cycle transversal");
    add_run_flags(solve_oct, oct_flags);
    solve_oct->add_option("-k", oct_k, "required transversal size")->required()->check(CLI::PositiveNumber);
    solve_oct->add_option("-q", oct_q, "unbreakability parameter")->required()->check(CLI::PositiveNumber);
    solve_oct->add_flag("--verify-promise", oct_verify, "check (q,2k)-unbreakability with the oracle first");
    solve_oct->add_flag("--oracle", oct_oracle, "answer with the exhaustive oracle instead");
    solve_oct->add_flag("--force-fpt-path", oct_force, "skip the small-instance brute force");
    solve_oct->add_option("--cutoff-override", oct_cutoff, "replace the brute-force size cutoff");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive desk-scale queries");
    oracle_cmd->require_subcommand(1);
    std::string or_graph;
    bool or_unsafe = false;
    int or_s = 0, or_t = 0, or_v = 0, or_q = 0, or_k = 0;
    std::optional<int> or_max_size, or_cycle_v;
    auto oracle_sub = [&](const char* name, const char* desc) {
        auto* sub = oracle_cmd->add_subcommand(name, desc);
        sub->add_option("--graph", or_graph, "graph file")->required();
        sub->add_flag("--unsafe-large", or_unsafe, "raise the size guard to 63 vertices");
        return sub;
    };
    auto* enum_stsep = oracle_sub("enum-stsep", "all minimal st-separators");
    enum_stsep->add_option("--s", or_s)->required();
    enum_stsep->add_option("--t", or_t)->required();
    enum_stsep->add_option("--max-size", or_max_size, "only separators up to this size");
    auto* enum_oct = oracle_sub("enum-oct", "all minimal odd cycle transversals");
    auto* breakability = oracle_sub("breakability", "search for a witnessing separation");
    breakability->add_option("-q", or_q)->required()->check(CLI::PositiveNumber);
    breakability->add_option("-k", or_k)->required()->check(CLI::NonNegativeNumber);
    auto* path_through = oracle_sub("induced-path-through", "chordless s-t path through a vertex");
    path_through->add_option("--s", or_s)->required();
    path_through->add_option("--t", or_t)->required();
    path_through->add_option("--v", or_v)->required();
    auto* cycle_through = oracle_sub("odd-cycle-through", "chordless odd cycle through a vertex");
    cycle_through->add_option("--v", or_cycle_v, "vertex to query (default: every vertex)");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "instance transformations");
    reduce_cmd->require_subcommand(1);
    std::string red_graph, red_out, red_sidecar;
    int red_s = 0, red_t = 0, red_k = 0, red_a = 0, red_b = 0;
    auto reduce_sub = [&](const char* name, const char* desc) {
        auto* sub = reduce_cmd->add_subcommand(name, desc);
        sub->add_option("--graph", red_graph, "input graph file")->required();
        sub->add_option("--out", red_out, "output graph file")->required();
        sub->add_option("--sidecar", red_sidecar, "side-car JSON (default: <out>.json)");
        return sub;
    };
    auto* to_oct = reduce_sub("stsep-to-oct", "bipartite st-separator instance to an OCT instance");
    to_oct->add_option("--s", red_s)->required();
    to_oct->add_option("--t", red_t)->required();
    to_oct->add_option("-k", red_k)->required();
    auto* gadget = reduce_sub("odd-path-gadget", "apex over a and b");
    gadget->add_option("--a", red_a)->required();
    gadget->add_option("--b", red_b)->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "graph generators");
    gen_cmd->require_subcommand(1);
    std::string gen_out;
    int gen_n = 0, gen_m = 0;
    double gen_p = 0;
    std::uint64_t gen_seed = 0;
    auto gen_sub = [&](const char* name, const char* desc) {
        auto* sub = gen_cmd->add_subcommand(name, desc);
        sub->add_option("--out", gen_out, "write here instead of stdout");
        return sub;
    };
    auto* gen_path = gen_sub("path", "P_N");
    gen_path->add_option("N", gen_n)->required();
    auto* gen_cycle = gen_sub("cycle", "C_N");
    gen_cycle->add_option("N", gen_n)->required();
    auto* gen_clique = gen_sub("clique", "K_N");
    gen_clique->add_option("N", gen_n)->required();
    auto* gen_kab = gen_sub("complete-bipartite", "K_{A,B}");
    gen_kab->add_option("A", gen_n)->required();
    gen_kab->add_option("B", gen_m)->required();
    auto* gen_gnp = gen_sub("gnp", "G(N,P) from SEED");
    gen_gnp->add_option("N", gen_n)->required();
    gen_gnp->add_option("P", gen_p)->required();
    gen_gnp->add_option("SEED", gen_seed)->required();
    auto* gen_cwc = gen_sub("clique-with-cycle", "K_N with a chordless odd C_C through one clique vertex");
    gen_cwc->add_option("N", gen_n)->required();
    gen_cwc->add_option("C", gen_m)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "re-check a witness or run report against a graph");
    std::string ver_graph, ver_witness;
    verify_cmd->add_option("--graph", ver_graph, "graph file")->required();
    verify_cmd->add_option("--witness", ver_witness, "witness JSON or run report JSON")->required();

    std::vector<std::string> argv_store{"maxminsep"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    for (auto* sub = app.get_subcommands().front(); !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        command += " " + sub->get_name();
    }

    try {
        if (solve_stsep->parsed()) {
            const Graph g = read_graph_file(st_flags.graph);
            Report rep{command, args, st_flags.deterministic};
            const Vertex s = vertex_arg(g, st_s, "s"), t = vertex_arg(g, st_t, "t");
            const auto opts = solver_options(st_flags);
            if (st_oracle) {
                if (s == t) throw ContractViolation("s == t");
                auto w = oracle::maxmin_stsep_bruteforce(g, s, t, st_k, opts.oracle_limits);
                const Verdict v = w ? Verdict::yes : Verdict::no;
                out << rep.solved(g, v, w, {{"oracle", true}}).dump(2) << "\n";
                return verdict_exit(v);
            }
            auto r = solve_unbreakable_stsep(g, s, t, st_k, st_q, st_verify, opts);
            out << rep.solved(g, r.verdict, r.witness, stsep_counters(r.counters)).dump(2) << "\n";
            return verdict_exit(r.verdict);
        }

        if (solve_oct->parsed()) {
            const Graph g = read_graph_file(oct_flags.graph);
            Report rep{command, args, oct_flags.deterministic};
            const auto opts = solver_options(oct_flags);
            if (oct_oracle) {
                auto w = oracle::maxmin_oct_bruteforce(g, oct_k, opts.oracle_limits);
                const Verdict v = w ? Verdict::yes : Verdict::no;
                out << rep.solved(g, v, w, {{"oracle", true}}).dump(2) << "\n";
                return verdict_exit(v);
            }
            auto r = solve_unbreakable_oct(g, oct_k, oct_q, oct_force, oct_verify, opts, oct_cutoff);
            out << rep.solved(g, r.verdict, r.witness, oct_counters(r)).dump(2) << "\n";
            return verdict_exit(r.verdict);
        }

        if (oracle_cmd->parsed()) {
            const Graph g = read_graph_file(or_graph);
            Report rep{command, args, true};
            oracle::Limits limits;
            if (or_unsafe) limits.max_vertices = oracle::kHardMaxVertices;
            json j = rep.base(g);
            if (enum_stsep->parsed()) {
                const Vertex s = vertex_arg(g, or_s, "s"), t = vertex_arg(g, or_t, "t");
                auto seps = oracle::enumerate_minimal_st_separators(g, s, t, or_max_size, limits);
                auto list = json::array();
                for (const auto& z : seps) list.push_back(ids(z));
                j["result"] = {{"separators", list}, {"count", seps.size()}};
            } else if (enum_oct->parsed()) {
                auto octs = oracle::enumerate_minimal_octs(g, limits);
                auto list = json::array();
                for (const auto& z : octs) list.push_back(ids(z));
                j["result"] = {{"octs", list}, {"count", octs.size()}};
            } else if (breakability->parsed()) {
                auto b = oracle::breakability_witness(g, or_q, or_k, limits);
                json w = nullptr;
                if (b.witness) w = {{"x", ids(b.witness->x_side)}, {"y", ids(b.witness->y_side)}};
                j["result"] = {{"breakable", b.breakable}, {"separation", w}};
            } else if (path_through->parsed()) {
                const Vertex s = vertex_arg(g, or_s, "s"), t = vertex_arg(g, or_t, "t"),
                             v = vertex_arg(g, or_v, "v");
                auto p = oracle::induced_st_path_through(g, s, t, v, limits);
                json path = nullptr;
                if (p) {
                    path = json::array();
                    for (Vertex u : *p) path.push_back(u + 1);
                }
                j["result"] = {{"exists", p.has_value()}, {"path", path}};
            } else {
                std::vector<Vertex> queried;
                if (or_cycle_v)
                    queried.push_back(vertex_arg(g, *or_cycle_v, "v"));
                else
                    for (Vertex v = 0; v < g.n(); ++v) queried.push_back(v);
                auto list = json::array();
                for (Vertex v : queried) {
                    auto c = oracle::induced_odd_cycle_through(g, v, limits);
                    json cyc = nullptr;
                    if (c) {
                        cyc = json::array();
                        for (Vertex u : c->vertices) cyc.push_back(u + 1);
                    }
                    list.push_back({{"v", v + 1}, {"exists", c.has_value()}, {"cycle", cyc}});
                }
                j["result"] = list;
            }
            out << rep.finish(std::move(j)).dump(2) << "\n";
            return kExitYes;
        }

        if (reduce_cmd->parsed()) {
            const Graph g = read_graph_file(red_graph);
            ReductionResult r = to_oct->parsed()
                                    ? stsep_to_oct(g, vertex_arg(g, red_s, "s"), vertex_arg(g, red_t, "t"), red_k)
                                    : odd_path_to_odd_cycle_gadget(g, vertex_arg(g, red_a, "a"), vertex_arg(g, red_b, "b"));
            const std::string sidecar = red_sidecar.empty() ? red_out + ".json" : red_sidecar;
            write_file(red_out, serialize_graph(r.output_graph));
            write_file(sidecar, reduction_sidecar_json(r) + "\n");
            json j = Report{command, args, true}.base(g);
            j["output"] = red_out;
            j["output_hash"] = graph_hash(r.output_graph);
            j["sidecar"] = sidecar;
            j["case"] = to_string(r.case_tag);
            j["k_out"] = r.k_out;
            j["added_vertices"] = ids(r.added_vertices);
            out << j.dump(2) << "\n";
            return kExitYes;
        }

        if (gen_cmd->parsed()) {
            Graph g;
            if (gen_path->parsed())
                g = gen::path(gen_n);
            else if (gen_cycle->parsed())
                g = gen::cycle(gen_n);
            else if (gen_clique->parsed())
                g = gen::clique(gen_n);
            else if (gen_kab->parsed())
                g = gen::complete_bipartite(gen_n, gen_m);
            else if (gen_gnp->parsed())
                g = gen::gnp(gen_n, gen_p, gen_seed);
            else
                g = gen::clique_with_cycle(gen_n, gen_m);
            if (gen_out.empty())
                out << serialize_graph(g);
            else
                write_file(gen_out, serialize_graph(g));
            return kExitYes;
        }

        // verify
        const Graph g = read_graph_file(ver_graph);
        const json doc = read_json_file(ver_witness);
        json wj = doc;
        if (doc.is_object() && doc.contains("verdict")) {
            if (!doc.contains("witness") || doc["witness"].is_null())
                throw ParseError(0, "run report carries no witness (verdict " + doc["verdict"].dump() + ")");
            wj = doc["witness"];
        }
        if (doc.is_object() && doc.contains("instance_hash") && doc["instance_hash"].is_string() &&
            doc["instance_hash"].get<std::string>() != graph_hash(g))
            throw HashMismatch("instance hash " + doc["instance_hash"].get<std::string>() +
                               " does not match the graph (" + graph_hash(g) + ")");
        const Witness w = witness_from_json(wj);
        const bool size_ok = static_cast<int>(w.solution.size()) >= w.k;
        const bool valid = verify_witness(g, w) && size_ok;
        json j = Report{command, args, true}.base(g);
        j["kind"] = to_string(w.kind);
        j["valid"] = valid;
        j["size"] = w.solution.size();
        j["k"] = w.k;
        out << j.dump(2) << "\n";
        if (!valid) err << "maxminsep: witness rejected\n";
        return valid ? kExitYes : kExitNo;
    } catch (const ParseError& e) {
        return error_exit(command, args, kExitInput, "input", e.what(), out, err);
    } catch (const ContractViolation& e) {
        return error_exit(command, args, kExitContract, "contract", e.what(), out, err);
    } catch (const GuardExceeded& e) {
        return error_exit(command, args, kExitGuard, "guard", e.what(), out, err);
    } catch (const HashMismatch& e) {
        return error_exit(command, args, kExitHashMismatch, "hash-mismatch", e.what(), out, err);
    } catch (const std::exception& e) {
        return error_exit(command, args, kExitInternal, "internal", e.what(), out, err);
    }
}

}  // namespace maxminsep::cli
