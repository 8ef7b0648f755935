#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "relax/errors.hpp"

namespace relax {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates
using Distance = std::uint32_t;

inline constexpr Distance unreachable = std::numeric_limits<Distance>::max();
inline constexpr std::size_t default_bitset_threshold = 4096;

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }

    friend constexpr auto operator<=>(Edge const&, Edge const&) = default;
};

enum class DuplicateEdges { reject, collapse };

class Graph;
Graph build_graph(std::size_t n, std::span<Edge const> edges,
                  DuplicateEdges duplicates = DuplicateEdges::reject,
                  std::size_t bitset_threshold = default_bitset_threshold);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted neighbor lists; graphs with at most
/// `bitset_threshold` vertices additionally carry one adjacency bitset per
/// vertex so that `adjacent` is O(1). Both views always agree.
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const noexcept { return adj_.size(); }
    std::size_t num_edges() const noexcept { return m_; }

    /// m̄ = C(n,2) - m.
    std::uint64_t num_non_edges() const {
        std::uint64_t const n = adj_.size();
        if (n > 0 && (n - 1) > std::numeric_limits<std::uint64_t>::max() / n)
            throw std::overflow_error("C(n,2) overflows 64 bits");
        return n * (n == 0 ? 0 : n - 1) / 2 - m_;
    }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::span<Vertex const> neighbors(Vertex v) const { return adj_.at(v); }

    bool adjacent(Vertex u, Vertex v) const {
        if (!bits_.empty()) return bits_[u].test(v);
        auto const& nu = adj_[u];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    bool has_bitsets() const noexcept { return !bits_.empty() || adj_.empty(); }

    /// Edges as (u < v) pairs in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.push_back({u, v});
        return out;
    }

    /// Pairs {u,v}, u < v, that are not edges, in lexicographic order.
    std::vector<Edge> non_edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v = u + 1; v < adj_.size(); ++v)
                if (!adjacent(u, v)) out.push_back({u, v});
        return out;
    }

    friend bool operator==(Graph const& a, Graph const& b) { return a.adj_ == b.adj_; }

private:
    friend Graph build_graph(std::size_t, std::span<Edge const>, DuplicateEdges, std::size_t);

    std::vector<std::vector<Vertex>> adj_;
    std::vector<boost::dynamic_bitset<>> bits_;
    std::size_t m_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<Edge const> edges, DuplicateEdges duplicates,
                         std::size_t bitset_threshold) {
    if (n > std::numeric_limits<Vertex>::max())
        throw GraphError("vertex count " + std::to_string(n) + " exceeds id range");
    Graph g;
    g.adj_.assign(n, {});
    for (Edge e : edges) {
        if (e.u >= n || e.v >= n)
            throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    std::size_t twice_m = 0;
    for (Vertex u = 0; u < n; ++u) {
        auto& nu = g.adj_[u];
        std::sort(nu.begin(), nu.end());
        auto const last = std::unique(nu.begin(), nu.end());
        if (last != nu.end()) {
            if (duplicates == DuplicateEdges::reject)
                throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(*last) + "}");
            nu.erase(last, nu.end());
        }
        twice_m += nu.size();
    }
    g.m_ = twice_m / 2;
    if (n <= bitset_threshold) {
        g.bits_.assign(n, boost::dynamic_bitset<>(n));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : g.adj_[u]) g.bits_[u].set(v);
    }
    return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges,
                         DuplicateEdges duplicates = DuplicateEdges::reject) {
    return build_graph(n, std::span<Edge const>(edges.begin(), edges.size()), duplicates);
}

namespace detail {

/// BFS from `source` where only vertices with `allowed[v]` may be entered.
/// Passing an empty mask allows every vertex.
inline std::vector<Distance> bfs(Graph const& g, Vertex source, std::vector<char> const& allowed,
                                 Distance max_depth = unreachable) {
    std::vector<Distance> dist(g.num_vertices(), unreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.num_vertices());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex const u = queue[head];
        if (dist[u] >= max_depth) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != unreachable) continue;
            if (!allowed.empty() && !allowed[w]) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

inline std::vector<char> mask_of(std::size_t n, std::span<Vertex const> vertices) {
    std::vector<char> mask(n, 0);
    for (Vertex v : vertices) mask.at(v) = 1;
    return mask;
}

inline void check_vertex(Graph const& g, Vertex v) {
    if (v >= g.num_vertices())
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                std::to_string(g.num_vertices()));
}

} // namespace detail

/// Hop distances from `source`; unreachable vertices get `unreachable`.
inline std::vector<Distance> bfs_distances(Graph const& g, Vertex source) {
    detail::check_vertex(g, source);
    return detail::bfs(g, source, {});
}

/// Hop distances from `source` inside G[restrict_to ∪ {source}].
inline std::vector<Distance> bfs_distances(Graph const& g, Vertex source, std::span<Vertex const> restrict_to) {
    detail::check_vertex(g, source);
    auto mask = detail::mask_of(g.num_vertices(), restrict_to);
    mask[source] = 1;
    return detail::bfs(g, source, mask);
}

/// Distance between u and v in G[S ∪ {u,v}].
inline Distance dist_within(Graph const& g, std::span<Vertex const> s, Vertex u, Vertex v) {
    detail::check_vertex(g, u);
    detail::check_vertex(g, v);
    auto mask = detail::mask_of(g.num_vertices(), s);
    mask[u] = mask[v] = 1;
    return detail::bfs(g, u, mask)[v];
}

/// Closed ball {v : dist(u,v) <= r}, sorted.
inline VertexSet ball(Graph const& g, Vertex u, Distance r) {
    detail::check_vertex(g, u);
    auto const dist = detail::bfs(g, u, {}, r);
    VertexSet out;
    for (Vertex v = 0; v < dist.size(); ++v)
        if (dist[v] <= r) out.push_back(v);
    return out;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSet> connected_components(Graph const& g) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// A vertex permutation such that eliminating vertices from the back of
/// `order` to the front only ever removes a vertex with at most `bound`
/// remaining neighbors.
struct EliminationOrder {
    std::vector<Vertex> order;
    std::size_t bound = 0;
};

/// Replays `order` and checks that no eliminated vertex has more than `bound` remaining neighbors.
inline bool certifies(Graph const& g, EliminationOrder const& eo) {
    std::size_t const n = g.num_vertices();
    if (eo.order.size() != n) return false;
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex const v = eo.order[i];
        if (v >= n || position[v] != n) return false;
        position[v] = i;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto const earlier = std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                           [&](Vertex w) { return position[w] < position[v]; });
        if (static_cast<std::size_t>(earlier) > eo.bound) return false;
    }
    return true;
}

/// Min-degree peeling. Ties go to the smallest vertex id; the bound is the degeneracy.
inline EliminationOrder degeneracy_order(Graph const& g) {
    std::size_t const n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> sequence;
    sequence.reserve(n);
    std::size_t bound = 0;
    while (!queue.empty()) {
        auto const [d, v] = *queue.begin();
        queue.erase(queue.begin());
        bound = std::max(bound, d);
        removed[v] = 1;
        sequence.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            queue.emplace(--deg[w], w);
        }
    }
    std::reverse(sequence.begin(), sequence.end());
    return {std::move(sequence), bound};
}

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t non_edges = 0;
    std::size_t max_degree = 0;
    std::size_t h_index = 0;
    std::size_t degeneracy = 0;
    bool bipartite = true;
    std::size_t components = 0;
    std::vector<Distance> component_diameters;  // aligned with connected_components()
    std::optional<Distance> diameter;           // present only for connected, non-empty graphs
};

inline bool is_bipartite(Graph const& g) {
    std::vector<int> color(g.num_vertices(), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign({s});
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex const u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline std::size_t h_index(Graph const& g) {
    std::vector<std::size_t> degrees;
    degrees.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    std::size_t h = 0;
    while (h < degrees.size() && degrees[h] >= h + 1) ++h;
    return h;
}

inline GraphStats graph_stats(Graph const& g) {
    GraphStats st;
    st.n = g.num_vertices();
    st.m = g.num_edges();
    st.non_edges = g.num_non_edges();
    for (Vertex v = 0; v < st.n; ++v) st.max_degree = std::max(st.max_degree, g.degree(v));
    st.h_index = h_index(g);
    st.degeneracy = degeneracy_order(g).bound;
    st.bipartite = is_bipartite(g);
    auto const comps = connected_components(g);
    st.components = comps.size();
    for (auto const& comp : comps) {
        Distance diam = 0;
        for (Vertex u : comp) {
            auto const dist = detail::bfs(g, u, {});
            for (Vertex v : comp) diam = std::max(diam, dist[v]);
        }
        st.component_diameters.push_back(diam);
    }
    if (comps.size() == 1) st.diameter = st.component_diameters.front();
    return st;
}

/// G^s: edge {u,v} iff 1 <= dist_G(u,v) <= s.
inline Graph power_graph(Graph const& g, Distance s) {
    if (s < 1) throw std::invalid_argument("power_graph requires s >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto const dist = detail::bfs(g, u, {}, s);
        for (Vertex v = u + 1; v < g.num_vertices(); ++v)
            if (dist[v] <= s) edges.push_back({u, v});
    }
    return build_graph(g.num_vertices(), edges);
}

/// G plus q new vertices n..n+q-1, each adjacent to every other vertex.
inline Graph pad_universal(Graph const& g, std::size_t q) {
    std::size_t const n = g.num_vertices();
    auto edges = g.edges();
    for (std::size_t i = 0; i < q; ++i) {
        auto const w = static_cast<Vertex>(n + i);
        for (Vertex v = 0; v < w; ++v) edges.push_back({v, w});
    }
    return build_graph(n + q, edges);
}

/// Subgraph induced by `keep` (sorted), relabelled 0..|keep|-1 in order.
inline Graph induced_subgraph(Graph const& g, std::span<Vertex const> keep) {
    std::vector<Vertex> index(g.num_vertices(), unreachable);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Edge e : g.edges())
        if (index[e.u] != unreachable && index[e.v] != unreachable) edges.push_back({index[e.u], index[e.v]});
    return build_graph(keep.size(), edges);
}

} // namespace relax
