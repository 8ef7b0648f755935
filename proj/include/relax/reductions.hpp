#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relax/errors.hpp"
#include "relax/graph.hpp"
#include "relax/rational.hpp"

namespace relax {

enum class ReductionKind { club_odd, club_even, gcs_degeneracy, gcs_ell };

inline std::string_view to_string(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::club_odd: return "club-odd";
    case ReductionKind::club_even: return "club-even";
    case ReductionKind::gcs_degeneracy: return "gcs-degeneracy";
    case ReductionKind::gcs_ell: return "gcs-ell";
    }
    return "?";
}

inline ReductionKind parse_reduction_kind(std::string_view text) {
    for (auto k : {ReductionKind::club_odd, ReductionKind::club_even, ReductionKind::gcs_degeneracy, ReductionKind::gcs_ell})
        if (to_string(k) == text) return k;
    throw std::invalid_argument("unknown reduction target '" + std::string(text) + "'");
}

enum class Role { blue, red, green, purple, yellow };

inline std::string_view to_string(Role role) {
    switch (role) {
    case Role::blue: return "blue";
    case Role::red: return "red";
    case Role::green: return "green";
    case Role::purple: return "purple";
    case Role::yellow: return "yellow";
    }
    return "?";
}

inline Role parse_role(std::string_view text) {
    for (auto r : {Role::blue, Role::red, Role::green, Role::purple, Role::yellow})
        if (to_string(r) == text) return r;
    throw std::invalid_argument("unknown role '" + std::string(text) + "'");
}

struct ReductionParams {
    std::optional<Distance> s;
    std::optional<Gamma> gamma;
    std::optional<std::uint64_t> r;
    std::optional<std::uint64_t> big_r;  // R = r(k+3)
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> d_gamma;
    std::optional<std::uint64_t> big_n;  // N
    std::optional<std::uint64_t> mbar;
    std::optional<std::uint64_t> red_yellow_degree;
    std::optional<std::uint64_t> purple_window;
    std::optional<std::uint64_t> ell_prime;

    friend bool operator==(ReductionParams const&, ReductionParams const&) = default;
};

/// Output of a reduction from Clique. Vertex ids of `gprime` are laid out as
/// blues (source order), then reds (by source pair, path order), then greens
/// (by red pair, path order), then purples, then yellows.
struct ReductionArtifact {
    ReductionKind kind = ReductionKind::club_odd;
    Graph source;
    std::size_t k = 0;
    Graph gprime;
    std::size_t kprime = 0;
    std::uint64_t kprime_closed_form = 0;
    std::vector<Role> roles;
    std::vector<Vertex> blue_map;   // blue_map[i]: source vertex of blue vertex i
    std::vector<Edge> red_map;      // red_map[j]: source edge (non-edge for gcs-ell) of the j-th red vertex
    std::vector<Vertex> stripped;   // isolated source vertices dropped before construction
    ReductionParams params;
    std::optional<bool> trivial;    // set when the source was decided directly

    std::size_t count(Role role) const { return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), role)); }

    /// Ids of all vertices with the given role, ascending.
    VertexSet vertices(Role role) const {
        VertexSet out;
        for (Vertex v = 0; v < roles.size(); ++v)
            if (roles[v] == role) out.push_back(v);
        return out;
    }

    Vertex first_red() const { return static_cast<Vertex>(blue_map.size()); }

    friend bool operator==(ReductionArtifact const&, ReductionArtifact const&) = default;
};

namespace detail {

inline std::uint64_t choose2(std::uint64_t x) { return x * (x == 0 ? 0 : x - 1) / 2; }

/// Canonical one-vertex instance: kprime 1 is a yes-instance, kprime 2 a no-instance.
inline ReductionArtifact trivial_artifact(ReductionKind kind, Graph const& g, std::size_t k, bool yes) {
    ReductionArtifact a;
    a.kind = kind;
    a.source = g;
    a.k = k;
    a.gprime = build_graph(1, {});
    a.kprime = yes ? 1 : 2;
    a.kprime_closed_form = a.kprime;
    a.roles = {Role::yellow};
    a.trivial = yes;
    return a;
}

class ArtifactBuilder {
public:
    Vertex add(Role role) {
        roles_.push_back(role);
        return static_cast<Vertex>(roles_.size() - 1);
    }
    void link(Vertex u, Vertex v) { edges_.push_back({u, v}); }

    void path(Vertex from, std::vector<Vertex> const& interior, Vertex to) {
        Vertex prev = from;
        for (Vertex x : interior) {
            link(prev, x);
            prev = x;
        }
        link(prev, to);
    }

    std::vector<Role> const& roles() const { return roles_; }

    Graph graph() const { return build_graph(roles_.size(), edges_); }

    std::vector<Role> take_roles() { return std::move(roles_); }

private:
    std::vector<Role> roles_;
    std::vector<Edge> edges_;
};

struct StrippedSource {
    std::vector<Vertex> kept;      // non-isolated source vertices, ascending
    std::vector<Vertex> stripped;  // isolated ones
    std::vector<Vertex> index;     // source vertex -> blue id (unreachable if stripped)
};

inline StrippedSource strip_isolated(Graph const& g) {
    StrippedSource s;
    s.index.assign(g.num_vertices(), unreachable);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) {
            s.stripped.push_back(v);
        } else {
            s.index[v] = static_cast<Vertex>(s.kept.size());
            s.kept.push_back(v);
        }
    }
    return s;
}

/// Trivial-source handling shared by the distance constructions.
inline std::optional<ReductionArtifact> trivial_club_source(ReductionKind kind, Graph const& g, std::size_t k,
                                                            std::size_t non_isolated) {
    if (k <= 1) return trivial_artifact(kind, g, k, k == 0 || g.num_vertices() >= 1);
    if (g.num_edges() == 0 || k > non_isolated) return trivial_artifact(kind, g, k, false);
    return std::nullopt;
}

/// Blues plus the (s-2)-vertex red subdivision path of every source edge.
inline void subdivide(ArtifactBuilder& b, ReductionArtifact& a, StrippedSource const& src, Graph const& g, Distance s,
                      std::vector<std::vector<Vertex>>& red_paths) {
    for (Vertex v : src.kept) {
        b.add(Role::blue);
        a.blue_map.push_back(v);
    }
    for (Edge e : g.edges()) {
        std::vector<Vertex> path;
        for (Distance i = 0; i + 2 < s; ++i) {
            path.push_back(b.add(Role::red));
            a.red_map.push_back(e);
        }
        b.path(src.index[e.u], path, src.index[e.v]);
        red_paths.push_back(std::move(path));
    }
}

} // namespace detail

/// Odd s >= 3: subdivide every edge into a path of length s-1 and attach one
/// hub to the middle red vertex of every path. kprime = k + (s-2)m + 1.
inline ReductionArtifact reduce_club_odd(Graph const& g, std::size_t k, Distance s) {
    if (s < 3 || s % 2 == 0) throw ReductionError("club-odd requires odd s >= 3, got " + std::to_string(s));
    auto const src = detail::strip_isolated(g);
    if (auto t = detail::trivial_club_source(ReductionKind::club_odd, g, k, src.kept.size())) {
        t->params.s = s;
        t->stripped = src.stripped;
        return *std::move(t);
    }

    ReductionArtifact a;
    a.kind = ReductionKind::club_odd;
    a.source = g;
    a.k = k;
    a.stripped = src.stripped;
    a.params.s = s;

    detail::ArtifactBuilder b;
    std::vector<std::vector<Vertex>> red_paths;
    detail::subdivide(b, a, src, g, s, red_paths);
    Vertex const hub = b.add(Role::yellow);
    for (auto const& path : red_paths) b.link(hub, path[(s - 1) / 2 - 1]);

    a.gprime = b.graph();
    a.roles = b.take_roles();
    a.kprime = k + a.count(Role::red) + a.count(Role::yellow);
    a.kprime_closed_form = k + static_cast<std::uint64_t>(s - 2) * g.num_edges() + 1;
    return a;
}

/// Even s >= 4: subdivide as in the odd case, join every two reds from
/// distinct source edges by a green path of length s-1, and attach one hub to
/// the two middle greens of each green path. kprime counts actual vertices;
/// the closed form is kept in kprime_closed_form.
inline ReductionArtifact reduce_club_even(Graph const& g, std::size_t k, Distance s) {
    if (s < 4 || s % 2 != 0) throw ReductionError("club-even requires even s >= 4, got " + std::to_string(s));
    auto const src = detail::strip_isolated(g);
    if (auto t = detail::trivial_club_source(ReductionKind::club_even, g, k, src.kept.size())) {
        t->params.s = s;
        t->stripped = src.stripped;
        return *std::move(t);
    }
    if (g.num_edges() < 2) throw ReductionError("club-even requires at least 2 source edges");

    ReductionArtifact a;
    a.kind = ReductionKind::club_even;
    a.source = g;
    a.k = k;
    a.stripped = src.stripped;
    a.params.s = s;

    detail::ArtifactBuilder b;
    std::vector<std::vector<Vertex>> red_paths;
    detail::subdivide(b, a, src, g, s, red_paths);

    Vertex const first_red = a.first_red();
    std::size_t const reds = a.red_map.size();
    std::vector<std::vector<Vertex>> green_paths;
    for (std::size_t i = 0; i < reds; ++i)
        for (std::size_t j = i + 1; j < reds; ++j) {
            if (a.red_map[i] == a.red_map[j]) continue;
            std::vector<Vertex> path;
            for (Distance x = 0; x + 2 < s; ++x) path.push_back(b.add(Role::green));
            b.path(first_red + static_cast<Vertex>(i), path, first_red + static_cast<Vertex>(j));
            green_paths.push_back(std::move(path));
        }
    Vertex const hub = b.add(Role::yellow);
    for (auto const& path : green_paths) {
        b.link(hub, path[(s - 2) / 2 - 1]);
        b.link(hub, path[(s - 2) / 2]);
    }

    a.gprime = b.graph();
    a.roles = b.take_roles();
    a.kprime = k + a.count(Role::red) + a.count(Role::green) + a.count(Role::yellow);
    std::uint64_t const sm = static_cast<std::uint64_t>(s - 2) * g.num_edges();
    a.kprime_closed_form = k + sm + (s - 2) * detail::choose2(sm) + 1;
    return a;
}

/// Universal-vertex padding that brings k into the form a construction assumes.
enum class NormalizeMode { degeneracy, ell };

struct NormalizedInstance {
    Graph graph;
    std::size_t k = 0;
    std::size_t q = 0;
};

/// Smallest q >= 0 with k+q = 2r(b-a)+2, r >= 1 (degeneracy) or k+q > 2b/a (ell).
inline std::size_t normalization_padding(std::size_t k, Gamma gamma, NormalizeMode mode) {
    std::uint64_t const a = gamma.num(), b = gamma.den();
    std::uint64_t target = 0;
    if (mode == NormalizeMode::degeneracy) {
        std::uint64_t const step = 2 * (b - a);
        std::uint64_t const r = k <= 2 ? 1 : std::max<std::uint64_t>(1, (k - 2 + step - 1) / step);
        target = r * step + 2;
    } else {
        target = std::max<std::uint64_t>(k, 2 * b / a + 1);
    }
    return static_cast<std::size_t>(target - k);
}

inline NormalizedInstance normalize_k_gcs(Graph const& g, std::size_t k, Gamma gamma, NormalizeMode mode) {
    if (k < 1) throw std::invalid_argument("normalize_k_gcs requires k >= 1");
    std::size_t const q = normalization_padding(k, gamma, mode);
    return {pad_universal(g, q), k + q, q};
}

/// Degeneracy-parameter construction for γ = a/b with k = 2r(b-a)+2: one red
/// per edge subdividing it, k-3 purples adjacent to every red, p = Ra-k+1
/// universal yellows; purples and yellows together form a clique.
inline ReductionArtifact reduce_gcs_degeneracy(Graph const& g, std::size_t k, Gamma gamma) {
    std::uint64_t const a = gamma.num(), b = gamma.den();
    std::uint64_t const step = 2 * (b - a);
    if (k < 4 || (k - 2) % step != 0)
        throw ReductionError("gcs-degeneracy requires k = 2r(b-a)+2 with r >= 1, got k=" + std::to_string(k) +
                             " for gamma " + gamma.to_string());
    std::uint64_t const r = (k - 2) / step;
    std::uint64_t const big_r = r * (k + 3);
    std::uint64_t const p = big_r * a - k + 1;
    std::uint64_t const d_gamma = k - 1 + p;

    ReductionArtifact art;
    art.kind = ReductionKind::gcs_degeneracy;
    art.source = g;
    art.k = k;
    art.params.gamma = gamma;
    art.params.r = r;
    art.params.big_r = big_r;
    art.params.p = p;
    art.params.d_gamma = d_gamma;

    detail::ArtifactBuilder bld;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        bld.add(Role::blue);
        art.blue_map.push_back(v);
    }
    VertexSet reds, purples, yellows;
    for (Edge e : g.edges()) {
        Vertex const red = bld.add(Role::red);
        art.red_map.push_back(e);
        bld.link(red, e.u);
        bld.link(red, e.v);
        reds.push_back(red);
    }
    for (std::size_t i = 0; i + 3 < k; ++i) purples.push_back(bld.add(Role::purple));
    for (std::uint64_t i = 0; i < p; ++i) yellows.push_back(bld.add(Role::yellow));

    for (Vertex pu : purples)
        for (Vertex red : reds) bld.link(pu, red);
    VertexSet special = purples;
    special.insert(special.end(), yellows.begin(), yellows.end());
    for (std::size_t i = 0; i < special.size(); ++i)
        for (std::size_t j = i + 1; j < special.size(); ++j) bld.link(special[i], special[j]);
    for (Vertex y : yellows)
        for (Vertex v = 0; v < purples.front(); ++v) bld.link(y, v);

    art.gprime = bld.graph();
    art.roles = bld.take_roles();
    art.kprime = k + detail::choose2(k) + art.count(Role::purple) + art.count(Role::yellow);
    art.kprime_closed_form = 2 * k - 3 + detail::choose2(k) + p;
    if (d_gamma != big_r * a || art.kprime - 1 != big_r * b)
        throw std::logic_error("gcs-degeneracy identities d = Ra, k'-1 = Rb do not hold");
    return art;
}

/// Smallest N with N(b-a) > a·n + a·m̄ + b, N > (k+1)(k+m̄), and
/// ⌈γ(N+n+m̄)⌉ < ⌈γ(N+n+m̄+1)⌉.
inline std::uint64_t find_N(std::uint64_t n, std::uint64_t mbar, std::uint64_t k, Gamma gamma) {
    std::uint64_t const a = gamma.num(), b = gamma.den();
    std::uint64_t const lower_ratio = (a * n + a * mbar + b) / (b - a) + 1;
    std::uint64_t const lower_size = (k + 1) * (k + mbar) + 1;
    std::uint64_t const start = std::max(lower_ratio, lower_size);
    for (std::uint64_t big_n = start; big_n <= start + b; ++big_n) {
        std::uint64_t const base = big_n + n + mbar;
        if (gamma.ceil_times(base) < gamma.ceil_times(base + 1)) return big_n;
    }
    throw std::logic_error("find_N: ceiling gap not reached within b steps");
}

/// ℓ-parameter construction for γ = a/b and k > 2b/a: the source graph kept
/// intact, one red per non-edge adjacent to both ends, a (k+1)-clique of
/// purples complete to the reds, and an N-clique of yellows complete to the
/// blues. Reds take the first d-k-2 yellows; purple i takes the cyclic window
/// of w = d-m̄-k yellows starting at i·w mod N.
inline ReductionArtifact reduce_gcs_ell(Graph const& g, std::size_t k, Gamma gamma) {
    std::uint64_t const a = gamma.num(), b = gamma.den();
    if (a * k <= 2 * b)
        throw ReductionError("gcs-ell requires k > 2/gamma, got k=" + std::to_string(k) + " for gamma " + gamma.to_string());
    std::uint64_t const n = g.num_vertices();
    std::uint64_t const mbar = g.num_non_edges();
    std::uint64_t const big_n = find_N(n, mbar, k, gamma);
    std::uint64_t const d_gamma = gamma.ceil_times(big_n + n + mbar);
    auto const red_yellow = static_cast<std::int64_t>(d_gamma) - static_cast<std::int64_t>(k) - 2;
    auto const window = static_cast<std::int64_t>(d_gamma) - static_cast<std::int64_t>(mbar) - static_cast<std::int64_t>(k);
    if (red_yellow < 0) throw ReductionError("gcs-ell: d_gamma - k - 2 is negative");
    if (window <= 0) throw ReductionError("gcs-ell: purple window d_gamma - mbar - k is not positive");
    if (static_cast<std::uint64_t>(window) > big_n || static_cast<std::uint64_t>(red_yellow) > big_n)
        throw ReductionError("gcs-ell: yellow attachment exceeds N");

    ReductionArtifact art;
    art.kind = ReductionKind::gcs_ell;
    art.source = g;
    art.k = k;
    art.params.gamma = gamma;
    art.params.big_n = big_n;
    art.params.mbar = mbar;
    art.params.d_gamma = d_gamma;
    art.params.red_yellow_degree = static_cast<std::uint64_t>(red_yellow);
    art.params.purple_window = static_cast<std::uint64_t>(window);

    detail::ArtifactBuilder bld;
    for (Vertex v = 0; v < n; ++v) {
        bld.add(Role::blue);
        art.blue_map.push_back(v);
    }
    for (Edge e : g.edges()) bld.link(e.u, e.v);
    VertexSet reds, purples, yellows;
    for (Edge e : g.non_edges()) {
        Vertex const red = bld.add(Role::red);
        art.red_map.push_back(e);
        bld.link(red, e.u);
        bld.link(red, e.v);
        reds.push_back(red);
    }
    for (std::size_t i = 0; i <= k; ++i) purples.push_back(bld.add(Role::purple));
    for (std::uint64_t i = 0; i < big_n; ++i) yellows.push_back(bld.add(Role::yellow));

    for (Vertex red : reds)
        for (Vertex pu : purples) bld.link(red, pu);
    for (std::size_t i = 0; i < purples.size(); ++i)
        for (std::size_t j = i + 1; j < purples.size(); ++j) bld.link(purples[i], purples[j]);
    for (std::size_t i = 0; i < yellows.size(); ++i)
        for (std::size_t j = i + 1; j < yellows.size(); ++j) bld.link(yellows[i], yellows[j]);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex y : yellows) bld.link(v, y);
    for (Vertex red : reds)
        for (std::int64_t j = 0; j < red_yellow; ++j) bld.link(red, yellows[static_cast<std::size_t>(j)]);
    auto const w = static_cast<std::uint64_t>(window);
    for (std::uint64_t i = 0; i < purples.size(); ++i)
        for (std::uint64_t j = 0; j < w; ++j) bld.link(purples[i], yellows[(i * w + j) % big_n]);

    art.gprime = bld.graph();
    art.roles = bld.take_roles();
    art.kprime = art.gprime.num_vertices() - k;
    art.kprime_closed_form = big_n + n + mbar + 1;
    art.params.ell_prime = art.gprime.num_vertices() - art.kprime;
    return art;
}

/// Dispatches on kind; `s` is used by the distance constructions, `gamma` by the others.
inline ReductionArtifact reduce(ReductionKind kind, Graph const& g, std::size_t k, Distance s, Gamma gamma) {
    switch (kind) {
    case ReductionKind::club_odd: return reduce_club_odd(g, k, s);
    case ReductionKind::club_even: return reduce_club_even(g, k, s);
    case ReductionKind::gcs_degeneracy: return reduce_gcs_degeneracy(g, k, gamma);
    case ReductionKind::gcs_ell: return reduce_gcs_ell(g, k, gamma);
    }
    throw std::invalid_argument("unknown reduction kind");
}

} // namespace relax
