#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "relax/io.hpp"
#include "relax/reductions.hpp"
#include "relax/solvers.hpp"

using namespace relax;
using namespace fixtures;

namespace {

Graph disjoint_edges(std::size_t count) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < count; ++i) e.push_back({2 * i, 2 * i + 1});
    return build_graph(2 * count, e);
}

std::uint64_t c2(std::uint64_t x) { return x * (x - 1) / 2; }

} // namespace

TEST(ClubOdd, SingleEdge) {
    auto const a = reduce_club_odd(build_graph(2, {{0, 1}}), 2, 3);
    EXPECT_EQ(a.gprime.num_vertices(), 4u);
    EXPECT_EQ(a.count(Role::blue), 2u);
    EXPECT_EQ(a.count(Role::red), 1u);
    EXPECT_EQ(a.count(Role::yellow), 1u);
    EXPECT_EQ(a.kprime, 4u);
}

TEST(ClubOdd, ThreeDisjointEdges) {
    auto const a = reduce_club_odd(disjoint_edges(3), 2, 3);
    EXPECT_EQ(a.gprime.num_vertices(), 10u);
    EXPECT_EQ(a.count(Role::blue), 6u);
    EXPECT_EQ(a.count(Role::red), 3u);
}

TEST(ClubOdd, TriangleS5) {
    auto const a = reduce_club_odd(complete(3), 3, 5);
    EXPECT_EQ(a.kprime, 13u);
    EXPECT_EQ(a.kprime_closed_form, 13u);
    EXPECT_EQ(degeneracy_order(a.gprime).bound, 2u);
    EXPECT_TRUE(is_bipartite(a.gprime));
}

TEST(ClubOdd, HubTouchesEveryPathMiddle) {
    for (Distance s : {3u, 5u, 7u}) {
        auto const src = gen_random(GenKind::gnm, 6, 7, s);
        auto const a = reduce_club_odd(src, 3, s);
        Vertex const hub = a.vertices(Role::yellow).at(0);
        EXPECT_EQ(a.gprime.degree(hub), src.num_edges());
        for (Vertex v : a.gprime.neighbors(hub)) {
            ASSERT_EQ(a.roles[v], Role::red);
            Edge const e = a.red_map[v - a.first_red()];
            // Middle of the path: (s-1)/2 steps from either end, avoiding the hub.
            VertexSet path_only;
            for (Vertex w = 0; w < a.roles.size(); ++w)
                if (a.roles[w] != Role::yellow) path_only.push_back(w);
            Vertex bu = 0, bv = 0;
            for (Vertex b = 0; b < a.blue_map.size(); ++b) {
                if (a.blue_map[b] == e.u) bu = b;
                if (a.blue_map[b] == e.v) bv = b;
            }
            EXPECT_EQ(dist_within(a.gprime, path_only, v, bu), (s - 1) / 2);
            EXPECT_EQ(dist_within(a.gprime, path_only, v, bv), (s - 1) / 2);
        }
    }
}

TEST(ClubOdd, StripsIsolatedVertices) {
    auto const g = build_graph(5, {{0, 2}, {2, 4}});
    auto const a = reduce_club_odd(g, 2, 3);
    EXPECT_EQ(a.stripped, (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(a.blue_map, (std::vector<Vertex>{0, 2, 4}));
    EXPECT_EQ(a.kprime, 2u + 2u + 1u);
}

TEST(ClubOdd, TrivialSources) {
    auto const none = reduce_club_odd(build_graph(4, {}), 2, 3);
    ASSERT_TRUE(none.trivial);
    EXPECT_FALSE(*none.trivial);
    EXPECT_FALSE(solve_s_club(none.gprime, none.kprime, 3).decision);
    auto const one = reduce_club_odd(build_graph(4, {}), 1, 3);
    ASSERT_TRUE(one.trivial);
    EXPECT_TRUE(*one.trivial);
    EXPECT_TRUE(solve_s_club(one.gprime, one.kprime, 3).decision);
    auto const big_k = reduce_club_odd(path(3), 4, 3);
    ASSERT_TRUE(big_k.trivial);
    EXPECT_FALSE(*big_k.trivial);
}

TEST(ClubOdd, RejectsEvenS) {
    EXPECT_THROW(reduce_club_odd(path(3), 2, 4), ReductionError);
    EXPECT_THROW(reduce_club_odd(path(3), 2, 1), ReductionError);
}

TEST(ClubEven, TwoDisjointEdges) {
    std::size_t const k = 2;
    auto const a = reduce_club_even(disjoint_edges(2), k, 4);
    EXPECT_EQ(a.count(Role::blue), 4u);
    EXPECT_EQ(a.count(Role::red), 4u);
    EXPECT_EQ(a.count(Role::green), 8u);
    EXPECT_EQ(a.count(Role::yellow), 1u);
    EXPECT_EQ(a.gprime.num_vertices(), 17u);
    EXPECT_EQ(a.kprime, k + 4 + 8 + 1);
    EXPECT_EQ(a.kprime_closed_form, k + 17);
    EXPECT_EQ(a.kprime_closed_form - a.kprime, 4u);
}

TEST(ClubEven, TriangleS4) {
    auto const a = reduce_club_even(complete(3), 3, 4);
    EXPECT_EQ(degeneracy_order(a.gprime).bound, 3u);
}

TEST(ClubEven, DiscrepancyFormula) {
    for (Distance s : {4u, 6u, 8u})
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            auto const g = gen_random(GenKind::gnm, 5, 2 + static_cast<double>(seed % 3), seed);
            auto const a = reduce_club_even(g, 2, s);
            std::uint64_t const m = g.num_edges();
            EXPECT_EQ(a.kprime_closed_form - a.kprime, (s - 2) * m * c2(s - 2));
        }
}

TEST(ClubEven, Errors) {
    EXPECT_THROW(reduce_club_even(path(3), 2, 5), ReductionError);
    EXPECT_THROW(reduce_club_even(build_graph(3, {{0, 1}}), 2, 4), ReductionError);
}

TEST(Layout, CanonicalOrder) {
    auto const g = build_graph(4, {{2, 3}, {0, 1}, {1, 2}});
    auto const a = reduce_club_even(g, 2, 4);
    // Blues, then reds grouped by source edge in lexicographic order, then greens, then the hub.
    EXPECT_EQ(a.red_map, (std::vector<Edge>{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}));
    std::vector<Role> expected(4, Role::blue);
    expected.insert(expected.end(), 6, Role::red);
    expected.insert(expected.end(), a.count(Role::green), Role::green);
    expected.push_back(Role::yellow);
    EXPECT_EQ(a.roles, expected);
}

TEST(Determinism, IdenticalInputsIdenticalArtifacts) {
    auto const g = gen_random(GenKind::gnp, 6, 0.5, 9);
    for (auto kind : {ReductionKind::club_odd, ReductionKind::club_even}) {
        Distance const s = kind == ReductionKind::club_odd ? 3 : 4;
        EXPECT_EQ(reduce(kind, g, 3, s, {}), reduce(kind, g, 3, s, {}));
    }
    EXPECT_EQ(reduce_gcs_degeneracy(g, 4, Gamma::of(1, 2)), reduce_gcs_degeneracy(g, 4, Gamma::of(1, 2)));
    EXPECT_EQ(reduce_gcs_ell(g, 3, Gamma::of(3, 4)), reduce_gcs_ell(g, 3, Gamma::of(3, 4)));
}

TEST(GcsDegeneracy, HalfTechnicalities) {
    auto const a = reduce_gcs_degeneracy(complete(4), 4, Gamma::of(1, 2));
    EXPECT_EQ(a.params.r, 1u);
    EXPECT_EQ(a.params.big_r, 7u);
    EXPECT_EQ(a.params.p, 4u);
    EXPECT_EQ(a.params.d_gamma, 7u);
    EXPECT_EQ(a.kprime, 15u);
    EXPECT_EQ(a.kprime_closed_form, 15u);
    EXPECT_EQ(7u * 2u, 1u * (a.kprime - 1));
    EXPECT_EQ(a.gprime.num_vertices(), 15u);
}

TEST(GcsDegeneracy, TwoThirdsTechnicalities) {
    auto const a = reduce_gcs_degeneracy(path(4), 4, Gamma::of(2, 3));
    EXPECT_EQ(a.params.big_r, 7u);
    EXPECT_EQ(a.params.p, 11u);
    EXPECT_EQ(a.params.d_gamma, 14u);
    EXPECT_EQ(a.kprime, 22u);
    EXPECT_EQ(14u * 3u, 2u * 21u);
}

TEST(GcsDegeneracy, K4DecidesYesAtKprime) {
    auto const a = reduce_gcs_degeneracy(complete(4), 4, Gamma::of(1, 2));
    auto const out = solve_gcs(a.gprime, a.kprime, Gamma::of(1, 2), GcsStrategy::brute);
    ASSERT_TRUE(out.decision);
    EXPECT_EQ(out.witness->size(), 15u);
}

TEST(GcsDegeneracy, RoleCountsAndRedDegrees) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto const g = gen_random(GenKind::gnp, 7, 0.4, seed);
        for (Gamma gm : {Gamma::of(1, 2), Gamma::of(2, 3), Gamma::of(3, 5)}) {
            std::size_t const k = 2 * (gm.den() - gm.num()) + 2;
            auto const a = reduce_gcs_degeneracy(g, k, gm);
            EXPECT_EQ(a.count(Role::blue), 7u);
            EXPECT_EQ(a.count(Role::red), g.num_edges());
            EXPECT_EQ(a.count(Role::purple), k - 3);
            EXPECT_EQ(a.count(Role::yellow), *a.params.p);
            for (Vertex v : a.vertices(Role::red)) EXPECT_EQ(a.gprime.degree(v), 2 + (k - 3) + *a.params.p);
            EXPECT_LE(degeneracy_order(a.gprime).bound, k - 1 + *a.params.p);
        }
    }
}

TEST(GcsDegeneracy, RejectsBadK) {
    EXPECT_THROW(reduce_gcs_degeneracy(path(4), 3, Gamma::of(1, 2)), ReductionError);
    EXPECT_THROW(reduce_gcs_degeneracy(path(4), 5, Gamma::of(1, 2)), ReductionError);
    EXPECT_NO_THROW(reduce_gcs_degeneracy(path(4), 6, Gamma::of(1, 2)));
}

TEST(Normalize, SpecExamples) {
    EXPECT_EQ(normalization_padding(4, Gamma::of(1, 2), NormalizeMode::degeneracy), 0u);
    EXPECT_EQ(normalization_padding(3, Gamma::of(1, 2), NormalizeMode::degeneracy), 1u);
    EXPECT_EQ(normalization_padding(2, Gamma::of(3, 4), NormalizeMode::ell), 1u);
}

TEST(Normalize, PreservesCliqueDecisionAndFitsShape) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto const g = gen_random(GenKind::gnp, 6, 0.5, seed);
        for (Gamma gm : {Gamma::of(1, 2), Gamma::of(2, 3), Gamma::of(3, 4), Gamma::of(1, 5)})
            for (auto mode : {NormalizeMode::degeneracy, NormalizeMode::ell})
                for (std::size_t k = 1; k <= 7; ++k) {
                    auto const norm = normalize_k_gcs(g, k, gm, mode);
                    EXPECT_EQ(norm.k, k + norm.q);
                    EXPECT_EQ(solve_clique(norm.graph, norm.k).decision, solve_clique(g, k).decision);
                    if (mode == NormalizeMode::degeneracy) {
                        EXPECT_EQ((norm.k - 2) % (2 * (gm.den() - gm.num())), 0u);
                        EXPECT_GE(norm.k, 2 * (gm.den() - gm.num()) + 2);
                    } else {
                        EXPECT_GT(gm.num() * norm.k, 2 * gm.den());
                        if (norm.q > 0) {
                            EXPECT_LE(gm.num() * (norm.k - 1), 2 * gm.den());
                        }
                    }
                }
    }
}

TEST(FindN, SpecExample) { EXPECT_EQ(find_N(4, 1, 3, Gamma::of(3, 4)), 20u); }

TEST(FindN, SmallestSatisfyingAllConditions) {
    auto holds = [](std::uint64_t n, std::uint64_t mbar, std::uint64_t k, std::uint64_t a, std::uint64_t b, std::uint64_t big_n) {
        std::uint64_t const base = big_n + n + mbar;
        bool const c1 = big_n * (b - a) > a * n + a * mbar + b;
        bool const c2 = (a * base + b - 1) / b < (a * (base + 1) + b - 1) / b;
        bool const c3 = big_n > (k + 1) * (k + mbar);
        return c1 && c2 && c3;
    };
    for (std::uint64_t n = 1; n <= 8; ++n)
        for (std::uint64_t mbar = 0; mbar <= n * (n - 1) / 2; mbar += 3)
            for (std::uint64_t k = 1; k <= 6; ++k)
                for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{1, 2}, {2, 3}, {3, 4}, {4, 7}, {1, 9}}) {
                    std::uint64_t const big_n = find_N(n, mbar, k, Gamma::of(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)));
                    EXPECT_TRUE(holds(n, mbar, k, a, b, big_n));
                    for (std::uint64_t smaller = 0; smaller < big_n; ++smaller) EXPECT_FALSE(holds(n, mbar, k, a, b, smaller));
                    if (a == 1 && b == 2) {
                        EXPECT_EQ((big_n + n + mbar) % 2, 0u);
                    }
                }
}

TEST(GcsEll, K4MinusEdge) {
    auto const a = reduce_gcs_ell(k4_minus_edge(), 3, Gamma::of(3, 4));
    EXPECT_EQ(a.params.big_n, 20u);
    EXPECT_EQ(a.kprime, 26u);
    EXPECT_EQ(a.kprime_closed_form, 26u);
    EXPECT_EQ(a.params.d_gamma, 19u);
    EXPECT_EQ(a.gprime.num_vertices(), 29u);
    EXPECT_EQ(a.params.ell_prime, 3u);
    EXPECT_EQ(a.params.red_yellow_degree, 14u);
    EXPECT_EQ(a.params.purple_window, 15u);
    auto const out = solve_gcs(a.gprime, a.kprime, Gamma::of(3, 4), GcsStrategy::xp_ell);
    EXPECT_TRUE(out.decision);
}

TEST(GcsEll, P4IsNo) {
    auto const a = reduce_gcs_ell(path(4), 3, Gamma::of(3, 4));
    EXPECT_EQ(a.params.ell_prime, 3u);
    EXPECT_FALSE(solve_gcs(a.gprime, a.kprime, Gamma::of(3, 4), GcsStrategy::xp_ell).decision);
}

TEST(GcsEll, DegreesAndCounts) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto const g = gen_random(GenKind::gnp, 5, 0.5, seed);
        auto const a = reduce_gcs_ell(g, 3, Gamma::of(3, 4));
        std::uint64_t const d = *a.params.d_gamma;
        EXPECT_EQ(a.count(Role::red), g.num_non_edges());
        EXPECT_EQ(a.count(Role::purple), 4u);
        EXPECT_EQ(a.count(Role::yellow), *a.params.big_n);
        for (Vertex v : a.vertices(Role::purple)) EXPECT_EQ(a.gprime.degree(v), d);
        for (Vertex v : a.vertices(Role::red)) EXPECT_EQ(a.gprime.degree(v), d + 1);
        EXPECT_EQ(a.gprime.num_vertices() - a.kprime, 3u);
    }
}

TEST(GcsEll, RejectsSmallK) { EXPECT_THROW(reduce_gcs_ell(path(4), 2, Gamma::of(3, 4)), ReductionError); }

TEST(ReductionKindNames, RoundTrip) {
    for (auto k : {ReductionKind::club_odd, ReductionKind::club_even, ReductionKind::gcs_degeneracy, ReductionKind::gcs_ell})
        EXPECT_EQ(parse_reduction_kind(to_string(k)), k);
    for (auto r : {Role::blue, Role::red, Role::green, Role::purple, Role::yellow}) EXPECT_EQ(parse_role(to_string(r)), r);
}
