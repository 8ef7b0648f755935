#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relax/graph.hpp"
#include "relax/io.hpp"
#include "relax/reductions.hpp"
#include "relax/solvers.hpp"
#include "relax/verify.hpp"

namespace relax {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
inline constexpr char const* tool_version = "0.1.0";

/// One solver run. `millis` is only filled when timing was requested, so
/// records are byte-identical across reruns by default.
struct ResultRecord {
    std::string problem;
    std::optional<Distance> s;
    std::optional<Gamma> gamma;
    std::size_t k = 0;
    std::string input_digest;
    bool decision = false;
    VertexSet witness;
    std::uint64_t nodes = 0;
    std::string method;
    std::optional<std::int64_t> millis;
    std::optional<std::uint64_t> seed;
};

inline ResultRecord make_result_record(ProblemSpec const& spec, Graph const& g, SolveOutcome const& out,
                                       bool with_timing = false) {
    ResultRecord r;
    r.problem = std::string(to_string(spec.kind));
    if (spec.kind == ProblemKind::s_club || spec.kind == ProblemKind::s_clique) r.s = spec.s;
    if (spec.kind == ProblemKind::gcs) r.gamma = spec.gamma;
    r.k = spec.k;
    r.input_digest = graph_digest(g);
    r.decision = out.decision;
    if (out.witness) r.witness = *out.witness;
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = out.nodes;
    r.method = out.method;
    if (with_timing) r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(out.elapsed).count();
    return r;
}

inline Json to_json(ResultRecord const& r) {
    Json params = Json::object();
    if (r.s) params["s"] = *r.s;
    if (r.gamma) params["gamma"] = r.gamma->to_string();
    params["k"] = r.k;
    Json stats = {{"nodes", r.nodes}, {"method", r.method}};
    if (r.millis) stats["millis"] = *r.millis;
    Json j = {{"schema_version", schema_version},
              {"tool_version", tool_version},
              {"problem", r.problem},
              {"params", params},
              {"input_digest", r.input_digest},
              {"decision", r.decision ? "yes" : "no"},
              {"witness", r.witness},
              {"stats", stats}};
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

inline Json to_json(GraphStats const& st) {
    Json j = {{"n", st.n},
              {"m", st.m},
              {"non_edges", st.non_edges},
              {"max_degree", st.max_degree},
              {"h_index", st.h_index},
              {"degeneracy", st.degeneracy},
              {"bipartite", st.bipartite},
              {"components", st.components},
              {"component_diameters", st.component_diameters}};
    j["diameter"] = st.diameter ? Json(*st.diameter) : Json(nullptr);
    return j;
}

inline Json to_json(ClaimReport const& r) {
    Json j = {{"id", r.id}, {"status", std::string(to_string(r.status))}};
    j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    j["details"] = r.details;
    return j;
}

/// Envelope for a batch of claim reports with pass/fail/skipped tallies.
inline Json claims_to_json(std::vector<ClaimReport> const& reports, Json context = Json::object()) {
    std::size_t pass = 0, fail = 0, skipped = 0;
    Json list = Json::array();
    for (auto const& r : reports) {
        list.push_back(to_json(r));
        pass += r.status == ClaimStatus::pass;
        fail += r.status == ClaimStatus::fail;
        skipped += r.status == ClaimStatus::skipped;
    }
    return {{"schema_version", schema_version},
            {"tool_version", tool_version},
            {"context", std::move(context)},
            {"reports", std::move(list)},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

namespace detail {

inline Json graph_json(Graph const& g) {
    Json edges = Json::array();
    for (Edge e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(Json const& j) {
    std::vector<Edge> edges;
    for (auto const& e : j.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    return build_graph(j.at("n").get<std::size_t>(), edges);
}

template <class T>
void put_opt(Json& j, char const* key, std::optional<T> const& v) {
    if (v) j[key] = *v;
}

template <class T>
void get_opt(Json const& j, char const* key, std::optional<T>& v) {
    if (j.contains(key)) v = j.at(key).get<T>();
}

} // namespace detail

inline Json artifact_to_json(ReductionArtifact const& a) {
    Json params = Json::object();
    detail::put_opt(params, "s", a.params.s);
    if (a.params.gamma) params["gamma"] = a.params.gamma->to_string();
    detail::put_opt(params, "r", a.params.r);
    detail::put_opt(params, "R", a.params.big_r);
    detail::put_opt(params, "p", a.params.p);
    detail::put_opt(params, "d_gamma", a.params.d_gamma);
    detail::put_opt(params, "N", a.params.big_n);
    detail::put_opt(params, "mbar", a.params.mbar);
    detail::put_opt(params, "red_yellow_degree", a.params.red_yellow_degree);
    detail::put_opt(params, "purple_window", a.params.purple_window);
    detail::put_opt(params, "ell_prime", a.params.ell_prime);

    Json roles = Json::array();
    for (Role r : a.roles) roles.push_back(std::string(to_string(r)));
    Json red_map = Json::array();
    for (Edge e : a.red_map) red_map.push_back({e.u, e.v});

    Json j = {{"schema_version", schema_version},
              {"tool_version", tool_version},
              {"kind", std::string(to_string(a.kind))},
              {"k", a.k},
              {"kprime", a.kprime},
              {"kprime_formula", a.kprime_closed_form},
              {"params", std::move(params)},
              {"source", detail::graph_json(a.source)},
              {"source_digest", graph_digest(a.source)},
              {"gprime", detail::graph_json(a.gprime)},
              {"gprime_digest", graph_digest(a.gprime)},
              {"roles", std::move(roles)},
              {"blue_map", a.blue_map},
              {"red_map", std::move(red_map)},
              {"stripped", a.stripped}};
    j["trivial"] = a.trivial ? Json(*a.trivial) : Json(nullptr);
    return j;
}

inline ReductionArtifact artifact_from_json(Json const& j) {
    try {
        if (j.at("schema_version").get<int>() != schema_version)
            throw ParseError("unsupported artifact schema version " + j.at("schema_version").dump());
        ReductionArtifact a;
        a.kind = parse_reduction_kind(j.at("kind").get<std::string>());
        a.k = j.at("k").get<std::size_t>();
        a.kprime = j.at("kprime").get<std::size_t>();
        a.kprime_closed_form = j.at("kprime_formula").get<std::uint64_t>();
        Json const& p = j.at("params");
        detail::get_opt(p, "s", a.params.s);
        if (p.contains("gamma")) a.params.gamma = Gamma::parse(p.at("gamma").get<std::string>());
        detail::get_opt(p, "r", a.params.r);
        detail::get_opt(p, "R", a.params.big_r);
        detail::get_opt(p, "p", a.params.p);
        detail::get_opt(p, "d_gamma", a.params.d_gamma);
        detail::get_opt(p, "N", a.params.big_n);
        detail::get_opt(p, "mbar", a.params.mbar);
        detail::get_opt(p, "red_yellow_degree", a.params.red_yellow_degree);
        detail::get_opt(p, "purple_window", a.params.purple_window);
        detail::get_opt(p, "ell_prime", a.params.ell_prime);
        a.source = detail::graph_from_json(j.at("source"));
        a.gprime = detail::graph_from_json(j.at("gprime"));
        for (auto const& r : j.at("roles")) a.roles.push_back(parse_role(r.get<std::string>()));
        a.blue_map = j.at("blue_map").get<std::vector<Vertex>>();
        for (auto const& e : j.at("red_map")) a.red_map.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
        a.stripped = j.at("stripped").get<std::vector<Vertex>>();
        if (!j.at("trivial").is_null()) a.trivial = j.at("trivial").get<bool>();
        if (a.roles.size() != a.gprime.num_vertices()) throw ParseError("artifact roles do not cover every vertex");
        // Blues occupy ids [0, |blue_map|), reds the next |red_map| ids.
        for (Vertex v = 0; v < a.roles.size(); ++v) {
            bool const blue_slot = v < a.blue_map.size();
            bool const red_slot = !blue_slot && v < a.blue_map.size() + a.red_map.size();
            if ((a.roles[v] == Role::blue) != blue_slot || (a.roles[v] == Role::red) != red_slot)
                throw ParseError("artifact role layout inconsistent at vertex " + std::to_string(v));
        }
        for (Vertex v : a.blue_map)
            if (v >= a.source.num_vertices()) throw ParseError("blue_map entry out of range");
        for (Edge e : a.red_map)
            if (e.u >= a.source.num_vertices() || e.v >= a.source.num_vertices())
                throw ParseError("red_map entry out of range");
        return a;
    } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("malformed artifact JSON: ") + e.what());
    } catch (GraphError const& e) {
        throw ParseError(std::string("malformed artifact graph: ") + e.what());
    }
}

} // namespace relax
