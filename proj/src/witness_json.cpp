#include "maxminsep/witness_json.hpp"

#include "maxminsep/errors.hpp"

namespace maxminsep {

namespace {

Vertex parse_id(const nlohmann::json& v, const char* field) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > (1LL << 30))
        throw ParseError(0, std::string("witness: '") + field + "' must hold positive integer ids");
    return static_cast<Vertex>(v.get<long long>() - 1);
}

}  // namespace

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j;
    j["kind"] = to_string(w.kind);
    j["k"] = w.k;
    j["s"] = w.s ? nlohmann::json(*w.s + 1) : nlohmann::json(nullptr);
    j["t"] = w.t ? nlohmann::json(*w.t + 1) : nlohmann::json(nullptr);
    auto sol = nlohmann::json::array();
    for (Vertex v : w.solution) sol.push_back(v + 1);
    j["solution"] = sol;
    j["trace"] = w.trace;
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError(0, "witness: expected a JSON object");
    Witness w;
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError(0, "witness: missing 'kind'");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "minimal-st-separator")
        w.kind = WitnessKind::minimal_st_separator;
    else if (kind == "minimal-oct")
        w.kind = WitnessKind::minimal_oct;
    else
        throw ParseError(0, "witness: unknown kind '" + kind + "'");
    if (j.contains("k") && !j["k"].is_null()) {
        if (!j["k"].is_number_integer()) throw ParseError(0, "witness: 'k' must be an integer");
        w.k = j["k"].get<int>();
    }
    for (const char* f : {"s", "t"}) {
        if (j.contains(f) && !j[f].is_null()) (f[0] == 's' ? w.s : w.t) = parse_id(j[f], f);
    }
    if (!j.contains("solution") || !j["solution"].is_array()) throw ParseError(0, "witness: missing 'solution'");
    for (const auto& v : j["solution"]) w.solution.insert(parse_id(v, "solution"));
    if (j.contains("trace") && j["trace"].is_array())
        for (const auto& line : j["trace"])
            if (line.is_string()) w.trace.push_back(line.get<std::string>());
    return w;
}

}  // namespace maxminsep
