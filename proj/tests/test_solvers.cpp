#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "relax/io.hpp"
#include "relax/solvers.hpp"

using namespace relax;
using namespace fixtures;

namespace {

Gamma g12() { return Gamma::of(1, 2); }
Gamma g34() { return Gamma::of(3, 4); }

VertexSet all_of(Graph const& g) {
    VertexSet s(g.num_vertices());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

} // namespace

TEST(Gamma, ReducesAndRejects) {
    EXPECT_EQ(Gamma::of(2, 4), g12());
    EXPECT_THROW(Gamma::of(0, 3), InvalidGamma);
    EXPECT_THROW(Gamma::of(3, 3), InvalidGamma);
    EXPECT_THROW(Gamma::parse("0.5"), InvalidGamma);
    EXPECT_THROW(Gamma::parse("1/"), InvalidGamma);
    EXPECT_EQ(Gamma::parse("3/4"), g34());
    EXPECT_EQ(g34().ceil_times(25), 19u);
    EXPECT_EQ(g34().ceil_times(24), 18u);
}

TEST(VerifySolution, SpecExamples) {
    EXPECT_TRUE(verify_solution(complete(3), ProblemSpec::clique(3), all_of(complete(3))));
    EXPECT_FALSE(verify_solution(path(4), ProblemSpec::s_club(2, 4), all_of(path(4))));
    EXPECT_TRUE(verify_solution(cycle(5), ProblemSpec::gcs(g12(), 5), all_of(cycle(5))));
}

TEST(VerifySolution, SizeFlag) {
    VertexSet edge{0, 1};
    EXPECT_FALSE(verify_solution(complete(3), ProblemSpec::clique(3), edge));
    EXPECT_TRUE(verify_solution(complete(3), ProblemSpec::clique(3), edge, false));
}

TEST(MaxClique, Examples) {
    EXPECT_EQ(max_clique(complete(4)).witness->size(), 4u);
    EXPECT_EQ(max_clique(cycle(5)).witness->size(), 2u);
    EXPECT_EQ(max_clique(petersen()).witness->size(), 2u);
    EXPECT_EQ(oracle::omega(petersen()), 2u);
}

TEST(MaxClique, MatchesOracle) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto const g = gen_random(GenKind::gnp, 11, 0.2 + 0.004 * static_cast<double>(seed), seed);
        auto const out = max_clique(g);
        EXPECT_EQ(out.witness->size(), oracle::omega(g)) << "seed " << seed;
        EXPECT_TRUE(oracle::is_clique(g, *out.witness));
    }
}

TEST(MaxClique, Deterministic) {
    auto const g = gen_random(GenKind::gnp, 40, 0.5, 3);
    auto const a = max_clique(g), b = max_clique(g);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Budget, ExceededThrows) {
    auto const g = gen_random(GenKind::gnp, 60, 0.5, 1);
    SolveOptions tiny;
    tiny.budget = 3;
    EXPECT_THROW(max_clique(g, tiny), BudgetExceeded);
}

TEST(SmallK, Conventions) {
    auto const empty = build_graph(0, {});
    EXPECT_TRUE(solve_clique(empty, 0).decision);
    EXPECT_FALSE(solve_clique(empty, 1).decision);
    EXPECT_TRUE(solve_s_club(build_graph(1, {}), 1, 2).decision);
    EXPECT_TRUE(solve_gcs(build_graph(3, {}), 1, g12(), GcsStrategy::brute).decision);
}

TEST(SClique, SpecExamples) {
    EXPECT_TRUE(solve_s_clique(path(4), 4, 3).decision);
    EXPECT_FALSE(solve_s_clique(path(5), 5, 3).decision);
    auto const yes = solve_s_clique(path(5), 4, 3);
    ASSERT_TRUE(yes.decision);
    EXPECT_EQ(yes.witness->size(), 4u);
    EXPECT_TRUE(oracle::is_s_clique(path(5), *yes.witness, 3));
}

TEST(SClique, SEqualsOneIsClique) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto const g = gen_random(GenKind::gnp, 9, 0.4, seed);
        for (std::size_t k = 0; k <= 9; ++k) EXPECT_EQ(solve_s_clique(g, k, 1).decision, solve_clique(g, k).decision);
    }
}

TEST(SClique, HereditaryWitnesses) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto const g = gen_random(GenKind::gnp, 8, 0.3, seed);
        auto const out = solve_s_clique(g, 3, 2);
        if (!out.decision) continue;
        auto const& w = *out.witness;
        for (std::uint64_t mask = 1; mask < (1u << w.size()); ++mask) {
            VertexSet sub;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (mask >> i & 1) sub.push_back(w[i]);
            EXPECT_TRUE(verify_solution(g, ProblemSpec::s_clique(2, sub.size()), sub));
        }
    }
}

TEST(SClub, SpecExamples) {
    EXPECT_TRUE(solve_s_club(star(5), 6, 2).decision);
    EXPECT_FALSE(solve_s_club(path(4), 4, 2).decision);
    EXPECT_TRUE(solve_s_club(path(4), 3, 2).decision);
    auto const bowtie = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto const out = solve_s_club(bowtie, 5, 2);
    ASSERT_TRUE(out.decision);
    EXPECT_EQ(out.witness->size(), 5u);
}

TEST(SClub, NotHereditary) {
    // The full star K1,3 is a 2-club; its three leaves are not even connected.
    auto const k13 = star(3);
    EXPECT_TRUE(verify_solution(k13, ProblemSpec::s_club(2, 4), VertexSet{0, 1, 2, 3}));
    EXPECT_FALSE(verify_solution(k13, ProblemSpec::s_club(2, 3), VertexSet{1, 2, 3}));
    EXPECT_TRUE(verify_solution(k13, ProblemSpec::s_clique(2, 3), VertexSet{1, 2, 3}));
}

TEST(SClub, DisconnectedHandledPerComponent) {
    auto const g = build_graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    EXPECT_TRUE(solve_s_club(g, 4, 2).decision);
    EXPECT_FALSE(solve_s_club(g, 5, 2).decision);
    EXPECT_FALSE(solve_s_club(g, 5, 100).decision);
}

TEST(SClub, MaxMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto const g = gen_random(GenKind::gnp, 9, 0.25, seed);
        for (Distance s : {2u, 3u}) {
            auto const out = max_s_club(g, s);
            EXPECT_EQ(out.witness->size(), oracle::max_s_club(g, s)) << "seed " << seed << " s " << s;
            EXPECT_TRUE(oracle::is_s_club(g, *out.witness, s));
        }
    }
}

TEST(Gcs, SpecExamples) {
    for (auto st : {GcsStrategy::brute, GcsStrategy::xp_degeneracy, GcsStrategy::xp_ell}) {
        EXPECT_TRUE(solve_gcs(complete(4), 4, g12(), st).decision);
        EXPECT_FALSE(solve_gcs(cycle(5), 5, g34(), st).decision);
        auto chord = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
        EXPECT_TRUE(solve_gcs(chord, 5, g12(), st).decision);
    }
}

TEST(Gcs, NonHereditaryWitness) {
    // K4 plus a pendant vertex: the K4 is a 4/5-complete subgraph of size 4,
    // but no 5-set is (the pendant has degree 1 < 4/5 * 4).
    auto const g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    Gamma const gm = Gamma::of(4, 5);
    for (auto st : {GcsStrategy::brute, GcsStrategy::xp_degeneracy, GcsStrategy::xp_ell}) {
        EXPECT_TRUE(solve_gcs(g, 4, gm, st).decision);
        EXPECT_FALSE(solve_gcs(g, 5, gm, st).decision);
    }
    EXPECT_EQ(oracle::max_gcs(g, 4, 5), 4u);
}

TEST(Gcs, StrategiesAgreeWithOracle) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto const g = gen_random(GenKind::gnp, 9, 0.3 + 0.005 * static_cast<double>(seed), seed);
        for (Gamma gm : {g12(), Gamma::of(2, 3), g34()}) {
            std::size_t const best = oracle::max_gcs(g, gm.num(), gm.den());
            for (std::size_t k = 0; k <= 10; ++k) {
                bool const want = k <= best;
                for (auto st : {GcsStrategy::brute, GcsStrategy::xp_degeneracy, GcsStrategy::xp_ell}) {
                    auto const out = solve_gcs(g, k, gm, st);
                    EXPECT_EQ(out.decision, want) << "seed " << seed << " k " << k << " " << to_string(st);
                    if (out.decision) {
                        EXPECT_TRUE(oracle::is_gcs(g, *out.witness, gm.num(), gm.den()));
                    }
                }
            }
        }
    }
}

TEST(Gcs, XpDegeneracyRejectsEarly) {
    // Tree: degeneracy 1 < (1/2)(k-1) for k = 4.
    auto const out = solve_gcs(path(6), 4, g12(), GcsStrategy::xp_degeneracy);
    EXPECT_FALSE(out.decision);
    EXPECT_EQ(out.nodes, 0u);
}

TEST(Forest, SpecExamples) {
    EXPECT_TRUE(solve_forest(path(5), 3, 2).decision);
    EXPECT_FALSE(solve_forest(path(5), 4, 2).decision);
    EXPECT_TRUE(solve_forest(path(5), 4, 3).decision);
    EXPECT_FALSE(solve_forest(path(5), 5, 3).decision);
    EXPECT_TRUE(solve_forest(star(9), 10, 2).decision);
    EXPECT_THROW(solve_forest(cycle(4), 2, 2), NotAForest);
}

TEST(Forest, WitnessesAreClubs) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto const t = gen_random(GenKind::forest, 12, 0.15, seed);
        for (Distance s = 1; s <= 5; ++s)
            for (std::size_t k = 0; k <= 12; ++k) {
                auto const out = solve_forest(t, k, s);
                EXPECT_EQ(out.decision, solve_s_club(t, k, s).decision);
                if (out.decision) {
                    EXPECT_TRUE(oracle::is_s_club(t, *out.witness, s));
                }
            }
    }
}

TEST(CrossCheck, SCliqueAndSClubAgainstOracles) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto const g = gen_random(GenKind::gnp, 9, 0.15 + 0.01 * static_cast<double>(seed), 500 + seed);
        for (Distance s : {2u, 3u}) {
            std::size_t const clq = oracle::max_s_clique(g, s);
            std::size_t const club = oracle::max_s_club(g, s);
            for (std::size_t k = 0; k <= 10; ++k) {
                EXPECT_EQ(solve_s_clique(g, k, s).decision, k <= clq);
                EXPECT_EQ(solve_s_club(g, k, s).decision, k <= club) << "seed " << seed << " s " << s << " k " << k;
            }
        }
    }
}
