#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "relax/errors.hpp"
#include "relax/graph.hpp"
#include "relax/rational.hpp"
#include "relax/reductions.hpp"
#include "relax/solvers.hpp"

// Checks here recount everything from the artifact's graph and roles. They
// deliberately do not call back into the constructions they audit.

namespace relax {

enum class ClaimStatus { pass, fail, skipped };

inline std::string_view to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
    }
    return "?";
}

/// Outcome of one machine-checked claim. A failure always carries a
/// counterexample: vertex ids for graph claims, the offending numbers for
/// arithmetic ones (see `details`).
struct ClaimReport {
    std::string id;
    ClaimStatus status = ClaimStatus::pass;
    std::optional<std::vector<std::uint64_t>> counterexample;
    std::string details;

    bool passed() const { return status == ClaimStatus::pass; }

    static ClaimReport pass(std::string id, std::string details) {
        return {std::move(id), ClaimStatus::pass, std::nullopt, std::move(details)};
    }
    static ClaimReport fail(std::string id, std::vector<std::uint64_t> cex, std::string details) {
        return {std::move(id), ClaimStatus::fail, std::move(cex), std::move(details)};
    }
    static ClaimReport skipped(std::string id, std::string details) {
        return {std::move(id), ClaimStatus::skipped, std::nullopt, std::move(details)};
    }

    friend bool operator==(ClaimReport const&, ClaimReport const&) = default;
};

inline bool all_passed(std::vector<ClaimReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.passed(); });
}

namespace detail {

inline std::uint64_t ceil_div(std::uint64_t x, std::uint64_t y) { return (x + y - 1) / y; }
inline std::uint64_t pairs(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Plain BFS over the whole graph.
inline std::vector<Distance> raw_bfs(Graph const& g, Vertex src) {
    std::vector<Distance> dist(g.num_vertices(), unreachable);
    std::vector<Vertex> queue{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex w : g.neighbors(queue[h]))
            if (dist[w] == unreachable) {
                dist[w] = dist[queue[h]] + 1;
                queue.push_back(w);
            }
    return dist;
}

/// BFS from src in which vertices flagged `blocked` (other than src) may end
/// a path but are never expanded; gives dist in G[(V∖blocked) ∪ {src, v}] for every v at once.
inline std::vector<Distance> interior_avoiding_bfs(Graph const& g, Vertex src, std::vector<char> const& blocked) {
    std::vector<Distance> dist(g.num_vertices(), unreachable);
    std::vector<Vertex> queue{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Vertex const u = queue[h];
        if (u != src && blocked[u]) continue;
        for (Vertex w : g.neighbors(u))
            if (dist[w] == unreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline std::string kind_label(ReductionArtifact const& a) { return std::string(to_string(a.kind)); }

struct ExpectedCounts {
    std::uint64_t blue = 0, red = 0, green = 0, purple = 0, yellow = 0;
};

inline ExpectedCounts expected_counts(ReductionArtifact const& a) {
    ExpectedCounts c;
    Graph const& src = a.source;
    std::uint64_t const m = src.num_edges();
    switch (a.kind) {
    case ReductionKind::club_odd:
    case ReductionKind::club_even: {
        std::uint64_t const s = a.params.s.value();
        for (Vertex v = 0; v < src.num_vertices(); ++v) c.blue += src.degree(v) > 0;
        c.red = (s - 2) * m;
        if (a.kind == ReductionKind::club_even) c.green = (s - 2) * (pairs((s - 2) * m) - m * pairs(s - 2));
        c.yellow = 1;
        break;
    }
    case ReductionKind::gcs_degeneracy: {
        Gamma const gm = a.params.gamma.value();
        std::uint64_t const r = (a.k - 2) / (2 * (gm.den() - gm.num()));
        c.blue = src.num_vertices();
        c.red = m;
        c.purple = a.k - 3;
        c.yellow = r * (a.k + 3) * gm.num() - a.k + 1;
        break;
    }
    case ReductionKind::gcs_ell:
        c.blue = src.num_vertices();
        c.red = pairs(src.num_vertices()) - m;
        c.purple = a.k + 1;
        c.yellow = a.params.big_n.value();
        break;
    }
    return c;
}

inline std::vector<std::uint64_t> as_values(VertexSet const& s) { return {s.begin(), s.end()}; }

/// Vertices of the (bound+1)-core, i.e. a subgraph with minimum degree > bound; empty if none.
inline VertexSet core_above(Graph const& g, std::size_t bound) {
    std::size_t const n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= bound) queue.push_back(v);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Vertex const v = queue[h];
        if (!alive[v]) continue;
        alive[v] = 0;
        for (Vertex w : g.neighbors(v))
            if (alive[w] && deg[w]-- == bound + 1) queue.push_back(w);
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) out.push_back(v);
    return out;
}

} // namespace detail

/// Re-validates the three numeric conditions on N in exact integers. On failure
/// the counterexample lists the violated condition numbers.
inline ClaimReport check_techN(std::uint64_t n, std::uint64_t mbar, std::uint64_t k, Gamma gamma, std::uint64_t big_n) {
    std::uint64_t const a = gamma.num(), b = gamma.den();
    std::vector<std::uint64_t> violated;
    if (!(big_n * (b - a) > a * n + a * mbar + b)) violated.push_back(1);
    std::uint64_t const base = big_n + n + mbar;
    if (!(detail::ceil_div(a * base, b) < detail::ceil_div(a * (base + 1), b))) violated.push_back(2);
    if (!(big_n > (k + 1) * (k + mbar))) violated.push_back(3);
    std::ostringstream os;
    os << "N=" << big_n << " n=" << n << " mbar=" << mbar << " k=" << k << " gamma=" << gamma.to_string();
    if (violated.empty()) return ClaimReport::pass("techN", os.str());
    os << " violates condition";
    for (auto c : violated) os << ' ' << c;
    return ClaimReport::fail("techN", violated, os.str());
}

/// Distance tables of the odd/even distance constructions, by all-pairs BFS:
///  .1 every pair with a non-blue end is within s;
///  .2 blue pairs sit at exactly s-1 (source edge) or s+1 (non-edge);
///  .3 every pair within s is joined by a path of length <= s avoiding blue interiors;
///  .ball the hub's ball covers the non-blue core.
inline std::vector<ClaimReport> check_distance_claims(ReductionArtifact const& a) {
    if (a.kind != ReductionKind::club_odd && a.kind != ReductionKind::club_even)
        throw ReductionError("distance claims apply to club-odd/club-even artifacts only");
    std::string const prefix = a.kind == ReductionKind::club_odd ? "claim1" : "claim2";
    if (a.trivial) return {ClaimReport::pass(prefix, "trivial source decided directly; no construction to check")};

    Graph const& g = a.gprime;
    Distance const s = a.params.s.value();
    std::size_t const n = g.num_vertices();
    std::vector<char> blue(n, 0);
    for (Vertex v = 0; v < n; ++v) blue[v] = a.roles[v] == Role::blue;

    std::optional<ClaimReport> fail1, fail2, fail3;
    std::uint64_t pairs = 0;
    for (Vertex u = 0; u < n; ++u) {
        auto const dist = detail::raw_bfs(g, u);
        auto const avoid = detail::interior_avoiding_bfs(g, u, blue);
        for (Vertex v = u + 1; v < n; ++v) {
            ++pairs;
            if (!blue[u] || !blue[v]) {
                if (dist[v] > s && !fail1)
                    fail1 = ClaimReport::fail(prefix + ".1", {u, v}, "non-blue pair at distance " + std::to_string(dist[v]));
            } else {
                bool const edge = a.source.adjacent(a.blue_map[u], a.blue_map[v]);
                Distance const want = edge ? s - 1 : s + 1;
                if (dist[v] != want && !fail2)
                    fail2 = ClaimReport::fail(prefix + ".2", {u, v},
                                              "blue pair at distance " + std::to_string(dist[v]) + ", expected " +
                                                  std::to_string(want));
            }
            if (dist[v] <= s && avoid[v] > s && !fail3)
                fail3 = ClaimReport::fail(prefix + ".3", {u, v}, "no short path avoiding blue interiors");
        }
    }
    std::string const checked = std::to_string(pairs) + " pairs checked";
    std::vector<ClaimReport> out;
    out.push_back(fail1.value_or(ClaimReport::pass(prefix + ".1", checked)));
    out.push_back(fail2.value_or(ClaimReport::pass(prefix + ".2", checked)));
    out.push_back(fail3.value_or(ClaimReport::pass(prefix + ".3", checked)));

    VertexSet const hubs = a.vertices(Role::yellow);
    Vertex const hub = hubs.at(0);
    auto const from_hub = detail::raw_bfs(g, hub);
    Distance const radius = a.kind == ReductionKind::club_odd ? (s - 1) / 2 : (s - 2) / 2;
    Role const covered = a.kind == ReductionKind::club_odd ? Role::red : Role::green;
    std::optional<ClaimReport> ball_fail;
    for (Vertex v = 0; v < n && !ball_fail; ++v)
        if (a.roles[v] == covered && from_hub[v] > radius)
            ball_fail = ClaimReport::fail(prefix + ".ball", {hub, v},
                                          std::string(to_string(covered)) + " vertex at distance " +
                                              std::to_string(from_hub[v]) + " from hub");
    out.push_back(ball_fail.value_or(ClaimReport::pass(
        prefix + ".ball", "all " + std::string(to_string(covered)) + " vertices within " + std::to_string(radius) + " of hub")));
    return out;
}

/// Degeneracy bound, bipartiteness, role cardinalities, per-role degrees and
/// the kprime arithmetic of any artifact.
inline std::vector<ClaimReport> check_structure(ReductionArtifact const& a) {
    if (a.trivial) return {ClaimReport::pass("structure", "trivial source decided directly; no construction to check")};
    std::vector<ClaimReport> out;
    Graph const& g = a.gprime;
    std::uint64_t const k = a.k;

    // Degeneracy.
    std::optional<std::uint64_t> bound;
    if (a.kind == ReductionKind::club_odd) bound = a.params.s.value() >= 5 ? 2 : 3;
    if (a.kind == ReductionKind::club_even) bound = a.params.s.value() >= 6 ? 2 : 3;
    if (a.kind == ReductionKind::gcs_degeneracy) bound = k - 1 + detail::expected_counts(a).yellow;
    auto const eo = degeneracy_order(g);
    if (!certifies(g, eo))
        out.push_back(ClaimReport::fail("deg-order", {eo.bound}, "elimination order does not certify its own bound"));
    if (bound) {
        if (eo.bound <= *bound)
            out.push_back(ClaimReport::pass("deg-bound", "degeneracy " + std::to_string(eo.bound) + " <= " + std::to_string(*bound)));
        else
            out.push_back(ClaimReport::fail("deg-bound", detail::as_values(detail::core_above(g, *bound)),
                                            "degeneracy " + std::to_string(eo.bound) + " exceeds " + std::to_string(*bound) +
                                                "; counterexample is a subgraph of larger minimum degree"));
    }

    // Bipartiteness of the odd construction: report a monochromatic edge on failure.
    if (a.kind == ReductionKind::club_odd) {
        std::vector<int> colour(g.num_vertices(), -1);
        std::optional<Edge> clash;
        for (Vertex s0 = 0; s0 < g.num_vertices() && !clash; ++s0) {
            if (colour[s0] != -1) continue;
            colour[s0] = 0;
            std::vector<Vertex> queue{s0};
            for (std::size_t h = 0; h < queue.size() && !clash; ++h)
                for (Vertex w : g.neighbors(queue[h])) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[queue[h]];
                        queue.push_back(w);
                    } else if (colour[w] == colour[queue[h]]) {
                        clash = Edge{queue[h], w};
                        break;
                    }
                }
        }
        out.push_back(clash ? ClaimReport::fail("bipartite", {clash->u, clash->v}, "edge inside one colour class")
                            : ClaimReport::pass("bipartite", "2-colouring found"));
    }

    // Role cardinalities.
    auto const want = detail::expected_counts(a);
    std::ostringstream counts;
    std::optional<ClaimReport> role_fail;
    for (auto [role, expected] : {std::pair{Role::blue, want.blue}, std::pair{Role::red, want.red},
                                  std::pair{Role::green, want.green}, std::pair{Role::purple, want.purple},
                                  std::pair{Role::yellow, want.yellow}}) {
        auto const have = a.count(role);
        counts << to_string(role) << '=' << have << ' ';
        if (have != expected && !role_fail)
            role_fail = ClaimReport::fail("roles", detail::as_values(a.vertices(role)),
                                          std::string(to_string(role)) + " count " + std::to_string(have) + ", expected " +
                                              std::to_string(expected));
    }
    out.push_back(role_fail.value_or(ClaimReport::pass("roles", counts.str())));

    // Per-role degrees and the target-size identities.
    if (a.kind == ReductionKind::gcs_degeneracy) {
        std::uint64_t const d = k - 1 + want.yellow;
        std::optional<ClaimReport> f;
        for (Vertex v : a.vertices(Role::red))
            if (g.degree(v) != d && !f)
                f = ClaimReport::fail("role-degree", {v}, "red degree " + std::to_string(g.degree(v)) + " != " + std::to_string(d));
        out.push_back(f.value_or(ClaimReport::pass("role-degree", "every red has degree " + std::to_string(d))));
        Gamma const gm = a.params.gamma.value();
        if (d * gm.den() == gm.num() * (a.kprime - 1))
            out.push_back(ClaimReport::pass("kprime-identity", "d*b == a*(kprime-1) with d=" + std::to_string(d)));
        else
            out.push_back(ClaimReport::fail("kprime-identity", {d, a.kprime}, "d*b != a*(kprime-1)"));
    }
    if (a.kind == ReductionKind::gcs_ell) {
        Gamma const gm = a.params.gamma.value();
        std::uint64_t const n = a.source.num_vertices();
        std::uint64_t const mbar = want.red;
        std::uint64_t const d = detail::ceil_div(gm.num() * (want.yellow + n + mbar), gm.den());
        std::optional<ClaimReport> f;
        for (Vertex v : a.vertices(Role::purple))
            if (g.degree(v) != d && !f)
                f = ClaimReport::fail("role-degree", {v}, "purple degree " + std::to_string(g.degree(v)) + " != " + std::to_string(d));
        for (Vertex v : a.vertices(Role::red))
            if (g.degree(v) != d + 1 && !f)
                f = ClaimReport::fail("role-degree", {v}, "red degree " + std::to_string(g.degree(v)) + " != " + std::to_string(d + 1));
        out.push_back(f.value_or(ClaimReport::pass("role-degree", "purples have degree d, reds d+1, d=" + std::to_string(d))));

        std::optional<ClaimReport> yp;
        for (Vertex y : a.vertices(Role::yellow)) {
            auto const nb = g.neighbors(y);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return a.roles[w] == Role::purple; })) {
                yp = ClaimReport::fail("yellow-purple", {y}, "yellow vertex without purple neighbour");
                break;
            }
        }
        out.push_back(yp.value_or(ClaimReport::pass("yellow-purple", "every yellow has a purple neighbour")));

        if (a.kprime >= 1 && d == detail::ceil_div(gm.num() * (a.kprime - 1), gm.den()) &&
            detail::ceil_div(gm.num() * (a.kprime - 1), gm.den()) < detail::ceil_div(gm.num() * a.kprime, gm.den()))
            out.push_back(ClaimReport::pass("kprime-identity", "d == ceil(gamma*(kprime-1)) < ceil(gamma*kprime)"));
        else
            out.push_back(ClaimReport::fail("kprime-identity", {d, a.kprime}, "ceiling identity on kprime fails"));

        std::uint64_t const ell = g.num_vertices() - a.kprime;
        out.push_back(ell == k ? ClaimReport::pass("ell-prime", "|V'| - kprime == k == " + std::to_string(k))
                               : ClaimReport::fail("ell-prime", {ell, k}, "|V'| - kprime != k"));
        out.push_back(check_techN(n, mbar, k, gm, want.yellow));
    }

    // kprime audit: actual count vs closed form.
    std::uint64_t actual = 0;
    switch (a.kind) {
    case ReductionKind::club_odd:
    case ReductionKind::club_even: actual = k + g.num_vertices() - a.count(Role::blue); break;
    case ReductionKind::gcs_degeneracy: actual = k + detail::pairs(k) + a.count(Role::purple) + a.count(Role::yellow); break;
    case ReductionKind::gcs_ell: actual = g.num_vertices() - k; break;
    }
    std::uint64_t expected_gap = 0;
    if (a.kind == ReductionKind::club_even) {
        std::uint64_t const s = a.params.s.value();
        expected_gap = (s - 2) * a.source.num_edges() * detail::pairs(s - 2);
    }
    bool const ok = a.kprime == actual && a.kprime_closed_form >= actual && a.kprime_closed_form - actual == expected_gap;
    std::string const detail_text = "kprime=" + std::to_string(a.kprime) + " recount=" + std::to_string(actual) +
                                    " formula=" + std::to_string(a.kprime_closed_form) +
                                    " expected gap=" + std::to_string(expected_gap);
    out.push_back(ok ? ClaimReport::pass("kprime-audit", detail_text)
                     : ClaimReport::fail("kprime-audit", {a.kprime, actual, a.kprime_closed_form}, detail_text));
    return out;
}

namespace detail {

inline std::vector<Vertex> blue_index(ReductionArtifact const& a) {
    std::vector<Vertex> index(a.source.num_vertices(), unreachable);
    for (Vertex i = 0; i < a.blue_map.size(); ++i) index[a.blue_map[i]] = i;
    return index;
}

inline ProblemSpec target_spec(ReductionArtifact const& a, ProblemKind distance_kind = ProblemKind::s_clique) {
    if (a.kind == ReductionKind::club_odd || a.kind == ReductionKind::club_even) {
        Distance const s = a.params.s.value();
        return distance_kind == ProblemKind::s_club ? ProblemSpec::s_club(s, a.kprime) : ProblemSpec::s_clique(s, a.kprime);
    }
    return ProblemSpec::gcs(a.params.gamma.value(), a.kprime);
}

} // namespace detail

/// The forward-direction solution built from a source clique K of size exactly k.
inline VertexSet lift_witness(ReductionArtifact const& a, std::span<Vertex const> clique) {
    VertexSet const K = detail::normalized_set(a.source, clique);
    if (K.size() != a.k || !verify_solution(a.source, ProblemSpec::clique(a.k), K))
        throw std::invalid_argument("lift_witness needs a clique of size exactly k = " + std::to_string(a.k));
    if (a.trivial) {
        if (!*a.trivial) throw std::invalid_argument("trivial no-instance has no witness");
        return {0};
    }
    auto const index = detail::blue_index(a);
    std::vector<char> in_k(a.source.num_vertices(), 0);
    for (Vertex v : K) in_k[v] = 1;

    VertexSet s;
    for (Vertex v = 0; v < a.roles.size(); ++v) {
        Role const r = a.roles[v];
        bool take = false;
        switch (a.kind) {
        case ReductionKind::club_odd:
        case ReductionKind::club_even:
            take = r != Role::blue || in_k[a.blue_map[v]];
            break;
        case ReductionKind::gcs_degeneracy:
            if (r == Role::blue) take = in_k[a.blue_map[v]];
            else if (r == Role::red) {
                Edge const e = a.red_map[v - a.first_red()];
                take = in_k[e.u] && in_k[e.v];
            } else take = true;
            break;
        case ReductionKind::gcs_ell:
            take = r != Role::blue || !in_k[a.blue_map[v]];
            break;
        }
        if (take) s.push_back(v);
    }
    return s;
}

/// Maps a target solution back to a source clique of size >= k. Throws
/// invalid_argument if S is not a solution and SoundnessError if the
/// projection is not a clique.
inline VertexSet project_witness(ReductionArtifact const& a, std::span<Vertex const> s_in) {
    VertexSet const S = detail::normalized_set(a.gprime, s_in);
    if (!verify_solution(a.gprime, detail::target_spec(a), S))
        throw std::invalid_argument("project_witness: set is not a solution of the target instance");
    if (a.trivial) return a.k == 0 ? VertexSet{} : VertexSet{0};

    VertexSet K;
    if (a.kind == ReductionKind::gcs_ell) {
        std::vector<char> in_s(a.gprime.num_vertices(), 0);
        for (Vertex v : S) in_s[v] = 1;
        for (Vertex v = 0; v < a.roles.size(); ++v) {
            if (in_s[v]) continue;
            if (a.roles[v] != Role::blue)
                throw SoundnessError("gcs-ell solution misses non-blue vertex " + std::to_string(v));
            K.push_back(a.blue_map[v]);
        }
    } else {
        for (Vertex v : S)
            if (a.roles[v] == Role::blue) K.push_back(a.blue_map[v]);
    }
    std::sort(K.begin(), K.end());
    if (K.size() < a.k || !verify_solution(a.source, ProblemSpec::clique(a.k), K))
        throw SoundnessError("projected set of size " + std::to_string(K.size()) + " is not a clique of size >= " +
                             std::to_string(a.k));
    return K;
}

/// The five structural consequences every γ-complete subgraph of size >= kprime
/// of a degeneracy-construction artifact must satisfy.
inline std::vector<ClaimReport> check_claim4(ReductionArtifact const& a, std::span<Vertex const> s_in) {
    VertexSet const S = detail::normalized_set(a.gprime, s_in);
    std::vector<char> in_s(a.gprime.num_vertices(), 0);
    for (Vertex v : S) in_s[v] = 1;
    auto const index = detail::blue_index(a);
    std::vector<ClaimReport> out;

    VertexSet reds;
    for (Vertex v : S)
        if (a.roles[v] == Role::red) reds.push_back(v);
    out.push_back(reds.empty() ? ClaimReport::fail("claim4.1", detail::as_values(S), "no red vertex in S")
                               : ClaimReport::pass("claim4.1", std::to_string(reds.size()) + " red vertices in S"));
    out.push_back(S.size() == a.kprime ? ClaimReport::pass("claim4.2", "|S| = kprime = " + std::to_string(a.kprime))
                                       : ClaimReport::fail("claim4.2", {S.size(), a.kprime}, "|S| != kprime"));

    std::optional<ClaimReport> f3;
    for (Vertex r : reds) {
        Edge const e = a.red_map[r - a.first_red()];
        if (!in_s[index[e.u]] || !in_s[index[e.v]]) {
            f3 = ClaimReport::fail("claim4.3", {r}, "red vertex present without both endpoints");
            break;
        }
    }
    out.push_back(f3.value_or(ClaimReport::pass("claim4.3", "every red in S has both endpoints in S")));

    std::optional<ClaimReport> f4;
    for (Vertex v = 0; v < a.roles.size(); ++v)
        if ((a.roles[v] == Role::purple || a.roles[v] == Role::yellow) && !in_s[v]) {
            f4 = ClaimReport::fail("claim4.4", {v}, "special vertex missing from S");
            break;
        }
    out.push_back(f4.value_or(ClaimReport::pass("claim4.4", "all special vertices in S")));

    std::optional<ClaimReport> f5;
    for (Vertex v : S) {
        if (a.roles[v] != Role::blue) continue;
        std::size_t red_nb = 0;
        for (Vertex w : a.gprime.neighbors(v)) red_nb += in_s[w] && a.roles[w] == Role::red;
        if (red_nb + 1 < a.k) {
            f5 = ClaimReport::fail("claim4.5", {v}, "blue vertex with " + std::to_string(red_nb) + " red neighbours in S");
            break;
        }
    }
    out.push_back(f5.value_or(ClaimReport::pass("claim4.5", "every blue in S has >= k-1 red neighbours in S")));
    return out;
}

/// The three consequences every γ-complete subgraph of size >= kprime of an
/// ℓ-construction artifact must satisfy.
inline std::vector<ClaimReport> check_claim5(ReductionArtifact const& a, std::span<Vertex const> s_in) {
    VertexSet const S = detail::normalized_set(a.gprime, s_in);
    std::vector<char> in_s(a.gprime.num_vertices(), 0);
    for (Vertex v : S) in_s[v] = 1;
    std::vector<ClaimReport> out;

    std::optional<ClaimReport> f1;
    for (Vertex v = 0; v < a.roles.size(); ++v)
        if (a.roles[v] != Role::blue && !in_s[v]) {
            f1 = ClaimReport::fail("claim5.1", {v}, "non-blue vertex missing from S");
            break;
        }
    out.push_back(f1.value_or(ClaimReport::pass("claim5.1", "S contains every non-blue vertex")));
    out.push_back(S.size() == a.kprime ? ClaimReport::pass("claim5.2", "|S| = kprime = " + std::to_string(a.kprime))
                                       : ClaimReport::fail("claim5.2", {S.size(), a.kprime}, "|S| != kprime"));
    auto const index = detail::blue_index(a);
    std::optional<ClaimReport> f3;
    for (Edge e : a.source.non_edges())
        if (!in_s[index[e.u]] && !in_s[index[e.v]]) {
            f3 = ClaimReport::fail("claim5.3", {index[e.u], index[e.v]}, "source non-edge with both ends outside S");
            break;
        }
    out.push_back(f3.value_or(ClaimReport::pass("claim5.3", "every source non-edge has an end in S")));
    return out;
}

/// Decides Clique(G,k) and the reduced instance with independent exact
/// solvers and requires agreement; on yes-instances also checks the witness
/// round trip and, for the γ constructions, the witness structure claims.
/// Budget exhaustion is reported as skipped, never as pass.
inline ClaimReport roundtrip_equivalence(Graph const& g, std::size_t k, ReductionKind kind, Distance s, Gamma gamma,
                                         SolveOptions const& opt = {}) {
    std::string const id = "roundtrip." + std::string(to_string(kind));
    try {
        // γ constructions need k of a fixed shape; padding with universal
        // vertices shifts the clique number and k alike.
        Graph padded = g;
        std::size_t q = 0;
        if (kind == ReductionKind::gcs_degeneracy || kind == ReductionKind::gcs_ell) {
            auto norm = normalize_k_gcs(g, k, gamma,
                                        kind == ReductionKind::gcs_ell ? NormalizeMode::ell : NormalizeMode::degeneracy);
            padded = std::move(norm.graph);
            q = norm.q;
        }
        ReductionArtifact const a = reduce(kind, padded, k + q, s, gamma);
        SolveOutcome const source = max_clique(padded, opt);
        k += q;
        bool const src_yes = source.witness->size() >= k;
        VertexSet K(source.witness->begin(), source.witness->begin() + static_cast<std::ptrdiff_t>(std::min(k, source.witness->size())));

        std::vector<std::pair<std::string, SolveOutcome>> targets;
        if (kind == ReductionKind::club_odd || kind == ReductionKind::club_even) {
            targets.emplace_back("s-club", solve_s_club(a.gprime, a.kprime, s, opt));
            targets.emplace_back("s-clique", solve_s_clique(a.gprime, a.kprime, s, opt));
        } else if (kind == ReductionKind::gcs_degeneracy) {
            targets.emplace_back("gcs", solve_gcs(a.gprime, a.kprime, gamma, GcsStrategy::brute, opt));
        } else {
            targets.emplace_back("gcs", solve_gcs(a.gprime, a.kprime, gamma, GcsStrategy::xp_ell, opt));
        }

        std::ostringstream os;
        os << "k=" << k - q << " pad=" << q << " kprime=" << a.kprime << " clique=" << (src_yes ? "yes" : "no");
        for (auto const& [name, out] : targets) os << ' ' << name << '=' << (out.decision ? "yes" : "no");
        for (auto const& [name, out] : targets)
            if (out.decision != src_yes) {
                auto cex = out.decision ? detail::as_values(*out.witness) : detail::as_values(K);
                return ClaimReport::fail(id, cex, os.str() + " (decision mismatch)");
            }
        if (!src_yes || a.trivial) return ClaimReport::pass(id, os.str());

        VertexSet const lifted = lift_witness(a, K);
        std::vector<ProblemSpec> specs;
        if (kind == ReductionKind::club_odd || kind == ReductionKind::club_even)
            specs = {ProblemSpec::s_club(s, a.kprime), ProblemSpec::s_clique(s, a.kprime)};
        else
            specs = {ProblemSpec::gcs(gamma, a.kprime)};
        for (auto const& spec : specs)
            if (!verify_solution(a.gprime, spec, lifted))
                return ClaimReport::fail(id, detail::as_values(lifted), os.str() + " (lifted set fails " +
                                                                           std::string(to_string(spec.kind)) + ")");
        VertexSet const back = project_witness(a, lifted);
        if (!std::includes(back.begin(), back.end(), K.begin(), K.end()))
            return ClaimReport::fail(id, detail::as_values(back), os.str() + " (project(lift(K)) does not contain K)");
        for (auto const& [name, out] : targets) {
            project_witness(a, *out.witness);
            std::vector<ClaimReport> structure;
            if (kind == ReductionKind::gcs_degeneracy) structure = check_claim4(a, *out.witness);
            if (kind == ReductionKind::gcs_ell) structure = check_claim5(a, *out.witness);
            for (auto const& r : structure)
                if (!r.passed()) return ClaimReport::fail(id, *r.counterexample, os.str() + " (" + r.id + ": " + r.details + ")");
        }
        return ClaimReport::pass(id, os.str() + " witnesses round-trip");
    } catch (BudgetExceeded const& e) {
        return ClaimReport::skipped(id, e.what());
    } catch (SoundnessError const& e) {
        return ClaimReport::fail(id, {}, e.what());
    }
}

} // namespace relax
