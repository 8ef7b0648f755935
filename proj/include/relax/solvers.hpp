#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "relax/errors.hpp"
#include "relax/graph.hpp"
#include "relax/rational.hpp"

namespace relax {

enum class ProblemKind { clique, s_club, s_clique, gcs };

inline std::string_view to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::clique: return "clique";
    case ProblemKind::s_club: return "s-club";
    case ProblemKind::s_clique: return "s-clique";
    case ProblemKind::gcs: return "gcs";
    }
    return "?";
}

/// Problem kind plus parameters. `s` is meaningful for the distance kinds,
/// `gamma` for gcs only.
struct ProblemSpec {
    ProblemKind kind = ProblemKind::clique;
    Distance s = 1;
    Gamma gamma;
    std::size_t k = 0;

    static ProblemSpec clique(std::size_t k) { return {ProblemKind::clique, 1, {}, k}; }
    static ProblemSpec s_club(Distance s, std::size_t k) { return {ProblemKind::s_club, checked_s(s), {}, k}; }
    static ProblemSpec s_clique(Distance s, std::size_t k) { return {ProblemKind::s_clique, checked_s(s), {}, k}; }
    static ProblemSpec gcs(Gamma gamma, std::size_t k) { return {ProblemKind::gcs, 1, gamma, k}; }

private:
    static Distance checked_s(Distance s) {
        if (s < 1) throw std::invalid_argument("s must be >= 1");
        return s;
    }
};

struct SolveOptions {
    std::uint64_t budget = 100'000'000;  // search nodes / tested subsets
};

struct SolveOutcome {
    bool decision = false;
    std::optional<VertexSet> witness;
    std::uint64_t nodes = 0;
    std::string method;
    std::chrono::nanoseconds elapsed{0};
};

enum class GcsStrategy { brute, xp_degeneracy, xp_ell };

inline std::string_view to_string(GcsStrategy s) {
    switch (s) {
    case GcsStrategy::brute: return "brute";
    case GcsStrategy::xp_degeneracy: return "xp-degeneracy";
    case GcsStrategy::xp_ell: return "xp-ell";
    }
    return "?";
}

namespace detail {

class Budget {
public:
    Budget(std::uint64_t limit, std::string where) : limit_(limit), where_(std::move(where)) {}

    void tick() {
        if (++used_ > limit_) throw BudgetExceeded(where_, limit_);
    }
    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::string where_;
};

inline VertexSet normalized_set(Graph const& g, std::span<Vertex const> s) {
    VertexSet out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("vertex set contains duplicates");
    if (!out.empty() && out.back() >= g.num_vertices())
        throw std::out_of_range("vertex " + std::to_string(out.back()) + " not in graph");
    return out;
}

inline std::size_t degree_within(Graph const& g, Vertex u, std::vector<char> const& mask) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(u)) d += mask[w] != 0;
    return d;
}

template <class F>
auto timed(F&& body) {
    auto const start = std::chrono::steady_clock::now();
    SolveOutcome out = body();
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

/// k = 0 is always yes with the empty set; k = 1 is yes iff the graph is non-empty.
inline std::optional<SolveOutcome> small_k(Graph const& g, std::size_t k) {
    if (k == 0) return SolveOutcome{true, VertexSet{}, 0, "trivial"};
    if (k == 1) {
        if (g.num_vertices() == 0) return SolveOutcome{false, std::nullopt, 0, "trivial"};
        return SolveOutcome{true, VertexSet{0}, 0, "trivial"};
    }
    return std::nullopt;
}

/// Visits r-subsets of 0..n-1 in lexicographic order until `visit` returns true.
inline bool for_each_combination(std::size_t n, std::size_t r, std::function<bool(std::span<Vertex const>)> const& visit) {
    if (r > n) return false;
    std::vector<Vertex> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = static_cast<Vertex>(i);
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Maximum clique search. Every clique is found in the earlier-neighbourhood
/// of its last vertex in a degeneracy order, so each subproblem has at most d
/// candidates; subproblems are solved by colour-bounded branch and bound.
class CliqueSearch {
public:
    CliqueSearch(Graph const& g, Budget& budget, std::size_t target) : g_(g), budget_(budget), target_(target) {}

    VertexSet run() {
        auto const eo = degeneracy_order(g_);
        std::vector<std::size_t> position(g_.num_vertices());
        for (std::size_t i = 0; i < eo.order.size(); ++i) position[eo.order[i]] = i;
        for (Vertex v : eo.order) {
            if (done()) break;
            std::vector<Vertex> cand;
            for (Vertex w : g_.neighbors(v))
                if (position[w] < position[v]) cand.push_back(w);
            if (cand.size() + 1 <= best_.size()) continue;
            solve_local(v, cand);
        }
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    using Bits = boost::dynamic_bitset<>;

    bool done() const { return target_ != 0 && best_.size() >= target_; }

    void solve_local(Vertex root, std::vector<Vertex> const& cand) {
        std::size_t const c = cand.size();
        local_ = cand;
        local_adj_.assign(c, Bits(c));
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = i + 1; j < c; ++j)
                if (g_.adjacent(cand[i], cand[j])) {
                    local_adj_[i].set(j);
                    local_adj_[j].set(i);
                }
        current_.assign({root});
        if (current_.size() > best_.size()) best_ = current_;
        Bits all(c);
        all.set();
        if (c > 0) expand(all);
    }

    void expand(Bits candidates) {
        budget_.tick();
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        colour_sort(candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (done() || current_.size() + bound[i] <= best_.size()) return;
            std::size_t const v = order[i];
            current_.push_back(local_[v]);
            Bits next = candidates & local_adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    // Greedy colouring in index order; bound[i] is the colour number of order[i].
    void colour_sort(Bits const& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        Bits uncoloured = candidates;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bits q = uncoloured;
            for (auto v = q.find_first(); v != Bits::npos; v = q.find_next(v)) {
                uncoloured.reset(v);
                q &= ~local_adj_[v];
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    Graph const& g_;
    Budget& budget_;
    std::size_t target_;
    VertexSet best_;
    std::vector<Vertex> current_;
    std::vector<Vertex> local_;
    std::vector<Bits> local_adj_;
};

} // namespace detail

/// True iff S satisfies the problem's predicate and (unless `enforce_size` is
/// false) |S| >= spec.k. Throws on out-of-range or repeated vertices.
inline bool verify_solution(Graph const& g, ProblemSpec const& spec, std::span<Vertex const> s_in,
                            bool enforce_size = true) {
    VertexSet const s = detail::normalized_set(g, s_in);
    if (enforce_size && s.size() < spec.k) return false;
    auto const mask = detail::mask_of(g.num_vertices(), s);
    switch (spec.kind) {
    case ProblemKind::clique:
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.adjacent(s[i], s[j])) return false;
        return true;
    case ProblemKind::s_club:
    case ProblemKind::s_clique: {
        std::vector<char> const everything;
        auto const& allowed = spec.kind == ProblemKind::s_club ? mask : everything;
        for (Vertex u : s) {
            auto const dist = detail::bfs(g, u, allowed, spec.s);
            for (Vertex v : s)
                if (dist[v] > spec.s) return false;
        }
        return true;
    }
    case ProblemKind::gcs:
        for (Vertex u : s)
            if (!spec.gamma.satisfied_by(detail::degree_within(g, u, mask), s.size())) return false;
        return true;
    }
    return false;
}

/// Exact maximum clique; the outcome's witness is a maximum clique (empty for the empty graph).
inline SolveOutcome max_clique(Graph const& g, SolveOptions const& opt = {}) {
    return detail::timed([&] {
        detail::Budget budget(opt.budget, "max_clique");
        auto best = detail::CliqueSearch(g, budget, 0).run();
        return SolveOutcome{true, std::move(best), budget.used(), "bb-clique"};
    });
}

/// Clique decision: is there a clique of size >= k?
inline SolveOutcome solve_clique(Graph const& g, std::size_t k, SolveOptions const& opt = {}) {
    return detail::timed([&] {
        if (auto trivial = detail::small_k(g, k)) return *trivial;
        detail::Budget budget(opt.budget, "solve_clique");
        auto best = detail::CliqueSearch(g, budget, k).run();
        bool const yes = best.size() >= k;
        return SolveOutcome{yes, yes ? std::optional(best) : std::nullopt, budget.used(), "bb-clique"};
    });
}

/// s-Clique decision via a clique search in the power graph G^s.
inline SolveOutcome solve_s_clique(Graph const& g, std::size_t k, Distance s, SolveOptions const& opt = {}) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    return detail::timed([&] {
        if (auto trivial = detail::small_k(g, k)) return *trivial;
        Graph const power = power_graph(g, s);
        detail::Budget budget(opt.budget, "solve_s_clique");
        auto best = detail::CliqueSearch(power, budget, k).run();
        bool const yes = best.size() >= k;
        return SolveOutcome{yes, yes ? std::optional(best) : std::nullopt, budget.used(), "power-clique"};
    });
}

namespace detail {

/// Far-pair branching for s-clubs. Any s-club inside S avoids u or v for every
/// pair with dist_S(u,v) > s, and lies inside one component of G[S].
class ClubSearch {
public:
    ClubSearch(Graph const& g, Distance s, Budget& budget) : g_(g), s_(s), budget_(budget) {}

    /// Stops at the first s-club of size >= need; with maximize, keeps the largest.
    std::optional<VertexSet> run(std::size_t need, bool maximize) {
        need_ = need;
        maximize_ = maximize;
        for (auto& comp : connected_components(g_)) {
            if (comp.size() < threshold()) continue;
            if (search(comp) && !maximize_) break;
        }
        if (best_.empty() && need_ > 0) return std::nullopt;
        return best_;
    }

private:
    std::size_t threshold() const { return maximize_ ? std::max(need_, best_.size() + 1) : need_; }

    bool search(VertexSet const& s) {
        budget_.tick();
        if (s.size() < threshold()) return false;
        auto const mask = mask_of(g_.num_vertices(), s);

        // Split along components of G[S] first.
        auto const first = bfs(g_, s.front(), mask);
        if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return first[v] == unreachable; })) {
            std::vector<char> seen(g_.num_vertices(), 0);
            bool found = false;
            for (Vertex root : s) {
                if (seen[root]) continue;
                auto const dist = root == s.front() ? first : bfs(g_, root, mask);
                VertexSet comp;
                for (Vertex v : s)
                    if (dist[v] != unreachable) {
                        seen[v] = 1;
                        comp.push_back(v);
                    }
                if (search(comp)) {
                    found = true;
                    if (!maximize_) return true;
                }
            }
            return found;
        }

        for (Vertex u : s) {
            auto const dist = u == s.front() ? first : bfs(g_, u, mask, s_);
            for (Vertex v : s) {
                if (v <= u || dist[v] <= s_) continue;
                VertexSet without_u, without_v;
                for (Vertex w : s) {
                    if (w != u) without_u.push_back(w);
                    if (w != v) without_v.push_back(w);
                }
                bool const a = search(without_u);
                if (a && !maximize_) return true;
                bool const b = search(without_v);
                return a || b;
            }
        }
        // No far pair: S is an s-club. Re-verify, as s-clubs are not hereditary.
        if (!verify_solution(g_, ProblemSpec::s_club(s_, 0), s))
            throw std::logic_error("s-club search produced a set that fails verification");
        if (s.size() > best_.size()) best_ = s;
        return true;
    }

    Graph const& g_;
    Distance s_;
    Budget& budget_;
    std::size_t need_ = 0;
    bool maximize_ = false;
    VertexSet best_;
};

/// Is there a t-subset with minimum internal degree >= delta? Vertices whose
/// degree in the candidate set drops below delta are peeled; a forced vertex
/// whose candidate degree equals delta forces its whole neighbourhood.
class FixedSizeDenseSearch {
public:
    FixedSizeDenseSearch(Graph const& g, std::size_t t, std::size_t delta, Budget& budget)
        : g_(g), t_(t), delta_(delta), budget_(budget) {}

    std::optional<VertexSet> run() {
        std::vector<char> cand(g_.num_vertices(), 1);
        std::vector<char> forced(g_.num_vertices(), 0);
        if (search(std::move(cand), std::move(forced))) return witness_;
        return std::nullopt;
    }

private:
    bool search(std::vector<char> cand, std::vector<char> forced) {
        budget_.tick();
        std::size_t const n = g_.num_vertices();
        std::vector<std::size_t> deg(n, 0);
        for (Vertex v = 0; v < n; ++v)
            if (cand[v]) deg[v] = degree_within(g_, v, cand);

        // Propagate peeling and forcing to a fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Vertex> queue;
            for (Vertex v = 0; v < n; ++v)
                if (cand[v] && deg[v] < delta_) queue.push_back(v);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex const v = queue[head];
                if (!cand[v]) continue;
                if (forced[v]) return false;
                cand[v] = 0;
                for (Vertex w : g_.neighbors(v))
                    if (cand[w] && deg[w]-- == delta_) queue.push_back(w);
            }
            for (Vertex v = 0; v < n; ++v) {
                if (!cand[v] || !forced[v] || deg[v] != delta_) continue;
                for (Vertex w : g_.neighbors(v))
                    if (cand[w] && !forced[w]) {
                        forced[w] = 1;
                        changed = true;
                    }
            }
        }

        std::size_t const size_c = static_cast<std::size_t>(std::count(cand.begin(), cand.end(), 1));
        std::size_t const size_f = static_cast<std::size_t>(std::count(forced.begin(), forced.end(), 1));
        if (size_c < t_ || size_f > t_) return false;
        if (size_c == t_) return accept(cand);
        if (size_f == t_) {
            for (Vertex v = 0; v < n; ++v)
                if (forced[v] && degree_within(g_, v, forced) < delta_) return false;
            return accept(forced);
        }

        Vertex pick = 0;
        std::size_t pick_deg = SIZE_MAX;
        for (Vertex v = 0; v < n; ++v)
            if (cand[v] && !forced[v] && deg[v] < pick_deg) {
                pick = v;
                pick_deg = deg[v];
            }
        auto with = forced;
        with[pick] = 1;
        if (search(cand, std::move(with))) return true;
        cand[pick] = 0;
        return search(std::move(cand), std::move(forced));
    }

    bool accept(std::vector<char> const& mask) {
        witness_.clear();
        for (Vertex v = 0; v < mask.size(); ++v)
            if (mask[v]) witness_.push_back(v);
        return true;
    }

    Graph const& g_;
    std::size_t t_;
    std::size_t delta_;
    Budget& budget_;
    VertexSet witness_;
};

inline bool is_gcs(Graph const& g, Gamma gamma, std::span<Vertex const> s, std::vector<char>& mask) {
    std::fill(mask.begin(), mask.end(), 0);
    for (Vertex v : s) mask[v] = 1;
    for (Vertex v : s)
        if (!gamma.satisfied_by(degree_within(g, v, mask), s.size())) return false;
    return true;
}

} // namespace detail

/// Exact s-Club decision by far-pair branch and bound over connected candidate sets.
inline SolveOutcome solve_s_club(Graph const& g, std::size_t k, Distance s, SolveOptions const& opt = {}) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    return detail::timed([&] {
        if (auto trivial = detail::small_k(g, k)) return *trivial;
        detail::Budget budget(opt.budget, "solve_s_club");
        auto witness = detail::ClubSearch(g, s, budget).run(k, false);
        bool const yes = witness.has_value();
        return SolveOutcome{yes, std::move(witness), budget.used(), "bb-club"};
    });
}

/// Largest s-club, by the same branching with an incumbent bound.
inline SolveOutcome max_s_club(Graph const& g, Distance s, SolveOptions const& opt = {}) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    return detail::timed([&] {
        detail::Budget budget(opt.budget, "max_s_club");
        auto witness = detail::ClubSearch(g, s, budget).run(0, true);
        return SolveOutcome{true, witness.value_or(VertexSet{}), budget.used(), "bb-club"};
    });
}

/// γ-Complete Subgraph decision.
///
/// - brute: for every target size t >= k, exhaustive search for a t-subset of
///   minimum internal degree ⌈γ(t-1)⌉ with degree peeling and forcing.
/// - xp-degeneracy: rejects when d < γ(k-1), else tests every S with
///   k <= |S| <= ⌊d/γ⌋ + 1.
/// - xp-ell: tests V∖D for every deletion set D with |D| <= ℓ = n - k.
inline SolveOutcome solve_gcs(Graph const& g, std::size_t k, Gamma gamma, GcsStrategy strategy,
                              SolveOptions const& opt = {}) {
    return detail::timed([&] {
        std::string const method(to_string(strategy));
        if (auto trivial = detail::small_k(g, k)) return *trivial;
        std::size_t const n = g.num_vertices();
        if (k > n) return SolveOutcome{false, std::nullopt, 0, method};
        detail::Budget budget(opt.budget, "solve_gcs/" + method);
        std::vector<char> mask(n, 0);

        switch (strategy) {
        case GcsStrategy::brute:
            for (std::size_t t = k; t <= n; ++t) {
                auto w = detail::FixedSizeDenseSearch(g, t, gamma.ceil_times(t - 1), budget).run();
                if (w) return SolveOutcome{true, std::move(w), budget.used(), method};
            }
            return SolveOutcome{false, std::nullopt, budget.used(), method};

        case GcsStrategy::xp_degeneracy: {
            std::uint64_t const d = degeneracy_order(g).bound;
            if (gamma.den() * d < gamma.num() * (k - 1)) return SolveOutcome{false, std::nullopt, 0, method};
            std::size_t const upper = std::min<std::size_t>(n, d * gamma.den() / gamma.num() + 1);
            VertexSet found;
            for (std::size_t size = k; size <= upper && found.empty(); ++size)
                detail::for_each_combination(n, size, [&](std::span<Vertex const> s) {
                    budget.tick();
                    if (!detail::is_gcs(g, gamma, s, mask)) return false;
                    found.assign(s.begin(), s.end());
                    return true;
                });
            bool const yes = !found.empty();
            return SolveOutcome{yes, yes ? std::optional(found) : std::nullopt, budget.used(), method};
        }

        case GcsStrategy::xp_ell: {
            std::size_t const ell = n - k;
            VertexSet found;
            VertexSet keep;
            std::vector<char> deleted(n, 0);
            for (std::size_t j = 0; j <= ell && found.empty(); ++j)
                detail::for_each_combination(n, j, [&](std::span<Vertex const> del) {
                    budget.tick();
                    std::fill(deleted.begin(), deleted.end(), 0);
                    for (Vertex v : del) deleted[v] = 1;
                    keep.clear();
                    for (Vertex v = 0; v < n; ++v)
                        if (!deleted[v]) keep.push_back(v);
                    if (!detail::is_gcs(g, gamma, keep, mask)) return false;
                    found = keep;
                    return true;
                });
            bool const yes = !found.empty();
            return SolveOutcome{yes, yes ? std::optional(found) : std::nullopt, budget.used(), method};
        }
        }
        return SolveOutcome{};
    });
}

/// s-Club and s-Clique on forests (the two coincide there). Yes if some
/// component has diameter <= s and size >= k; otherwise the largest candidates
/// are balls of radius s/2 (s even) or unions of two radius-(s-1)/2 balls
/// around the ends of an edge (s odd).
inline SolveOutcome solve_forest(Graph const& g, std::size_t k, Distance s) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (degeneracy_order(g).bound > 1) throw NotAForest("solve_forest requires a graph of degeneracy <= 1");
    return detail::timed([&] {
        if (auto trivial = detail::small_k(g, k)) return *trivial;
        std::uint64_t nodes = 0;
        for (auto const& comp : connected_components(g)) {
            ++nodes;
            if (comp.size() < k) continue;
            Distance diam = 0;
            for (Vertex u : comp) {
                auto const dist = bfs_distances(g, u);
                for (Vertex v : comp) diam = std::max(diam, dist[v]);
            }
            if (diam <= s) return SolveOutcome{true, comp, nodes, "forest"};
        }
        if (s % 2 == 0) {
            for (Vertex u = 0; u < g.num_vertices(); ++u) {
                ++nodes;
                auto b = ball(g, u, s / 2);
                if (b.size() >= k) return SolveOutcome{true, std::move(b), nodes, "forest"};
            }
        } else {
            for (Edge e : g.edges()) {
                ++nodes;
                auto bu = ball(g, e.u, (s - 1) / 2);
                auto const bv = ball(g, e.v, (s - 1) / 2);
                VertexSet both;
                std::set_union(bu.begin(), bu.end(), bv.begin(), bv.end(), std::back_inserter(both));
                if (both.size() >= k) return SolveOutcome{true, std::move(both), nodes, "forest"};
            }
        }
        return SolveOutcome{false, std::nullopt, nodes, "forest"};
    });
}

} // namespace relax
