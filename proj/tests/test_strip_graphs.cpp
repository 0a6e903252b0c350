#include "nilcox/strip_graphs.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace nilcox;

TEST(StripGraphs, WeakStrips) {
    const Rank r2(2);
    const AffinePerm s0 = simple(r2, 0);
    const std::set<AffinePerm> w1 = weak_strip_targets(s0, 1);
    EXPECT_EQ(w1, (std::set<AffinePerm>{from_word(r2, {2, 0}), from_word(r2, {1, 0})}));
    EXPECT_EQ(weak_strip_targets(s0, 0), std::set<AffinePerm>{s0});
    const std::set<AffinePerm> w2 = weak_strip_targets(s0, 2);
    EXPECT_EQ(w2, (std::set<AffinePerm>{from_word(r2, {0, 2, 0}), from_word(r2, {2, 1, 0})}));
    EXPECT_THROW(weak_strip_targets(s0, 3), std::invalid_argument);
}

TEST(StripGraphs, MarkingExampleEdges) {
    const Rank r2(2);
    const AffinePerm x = from_word(r2, {0, 1, 2, 0});
    const AffinePerm y = from_word(r2, {1, 2, 0});
    std::multiset<Int> labels;
    for (const auto& e : strong_edges_from(x))
        if (e.target == y) labels.insert(e.label);
    EXPECT_EQ(labels, (std::multiset<Int>{-2, 1}));
}

TEST(StripGraphs, SingleEdgeFromS0) {
    const Rank r2(2);
    const auto& edges = strong_edges_from(simple(r2, 0));
    ASSERT_EQ(edges.size(), 1u);
    EXPECT_TRUE(edges[0].target.is_identity());
    EXPECT_EQ(edges[0].label, 1);
}

TEST(StripGraphs, FullEdgeSetOutOfWorkedExample) {
    const Rank r2(2);
    const AffinePerm x = from_word(r2, {0, 1, 2, 0});
    std::map<AffinePerm, std::multiset<Int>> by_target;
    for (const auto& e : strong_edges_from(x)) by_target[e.target].insert(e.label);
    ASSERT_EQ(by_target.size(), 4u);
    EXPECT_EQ(by_target.at(from_word(r2, {0, 2, 0})), (std::multiset<Int>{-1, 2}));
    EXPECT_EQ(by_target.at(from_word(r2, {0, 1, 2})), (std::multiset<Int>{2}));
    EXPECT_EQ(by_target.at(from_word(r2, {1, 2, 0})), (std::multiset<Int>{-2, 1}));
    EXPECT_EQ(by_target.at(from_word(r2, {0, 1, 0})), (std::multiset<Int>{1}));
}

TEST(StripGraphs, EdgeInvariants) {
    // Every emitted edge is a cover x = y t_{i,j} with i <= 0 < j and
    // label y(j), re-verified from scratch.
    for (Int k : {2, 3}) {
        const Rank rank(k);
        const Int p = rank.period();
        for (const auto& level : elements_up_to(rank, 4))
            for (const auto& x : level)
                for (const auto& e : strong_edges_from(x)) {
                    EXPECT_EQ(e.source, x);
                    EXPECT_EQ(e.source.length(), e.target.length() + 1);
                    const AffinePerm t = multiply(inverse(e.target), e.source);
                    bool found = false;
                    for (Int j = 1; j <= 2 * x.length() * p && !found; ++j) {
                        if (e.target.apply(j) != e.label) continue;
                        for (Int i = j - 1; i >= j - 2 * x.length() * p && !found; --i) {
                            if (i > 0 || (j - i) % p == 0) continue;
                            if (t == transposition(rank, i, j)) found = true;
                        }
                    }
                    EXPECT_TRUE(found) << "no admissible (i,j) reproduces the edge";
                }
    }
}

TEST(StripGraphs, AscentComposition) {
    EXPECT_EQ(ascent_composition({3, 2, 0, 3, 4, 1}), (Composition{3, 1, 2}));
    EXPECT_EQ(ascent_composition({5, 4, 3, 2}), (Composition{4}));
    EXPECT_EQ(ascent_composition({1, 2, 3}), (Composition{1, 1, 1}));
    EXPECT_EQ(ascent_composition({7}), (Composition{1}));
    EXPECT_THROW(ascent_composition({}), std::invalid_argument);
}

TEST(StripGraphs, StrongStripTargets) {
    const Rank r2(2);
    const AffinePerm x = from_word(r2, {0, 1, 2, 0});
    const std::map<AffinePerm, Int> d1 = strong_strip_targets(x, 1);
    const std::map<AffinePerm, Int> d1_expected = {{from_word(r2, {0, 2, 0}), 2},
                                                   {from_word(r2, {0, 1, 2}), 1},
                                                   {from_word(r2, {1, 2, 0}), 2},
                                                   {from_word(r2, {0, 1, 0}), 1}};
    EXPECT_EQ(d1, d1_expected);

    const std::map<AffinePerm, Int> d2 = strong_strip_targets(x, 2);
    const std::map<AffinePerm, Int> d2_expected = {{from_word(r2, {0, 2}), 1},
                                                   {from_word(r2, {1, 2}), 1},
                                                   {from_word(r2, {2, 0}), 1},
                                                   {from_word(r2, {1, 0}), 1}};
    EXPECT_EQ(d2, d2_expected);

    EXPECT_EQ(strong_strip_targets(x, 0), (std::map<AffinePerm, Int>{{x, 1}}));
}

TEST(StripGraphs, NoStripsFromFiniteSubgroup) {
    for (Int k : {2, 3}) {
        const Rank rank(k);
        for (const auto& level : elements_up_to(rank, k * (k + 1) / 2))
            for (const auto& v : level) {
                if (!is_finite(v) || v.is_identity()) continue;
                EXPECT_TRUE(strong_edges_from(v).empty());
                EXPECT_TRUE(strong_strip_targets(v, 1).empty());
            }
    }
}

TEST(StripGraphs, PathsWithAscomp) {
    const Rank r2(2);
    const AffinePerm w = from_word(r2, {1, 2, 1, 0});
    using Multiset = std::map<AffinePerm, Int>;
    EXPECT_EQ(paths_with_ascomp(w, Composition{3}),
              (Multiset{{from_word(r2, {2}), 1}, {from_word(r2, {0}), 1}}));
    EXPECT_EQ(paths_with_ascomp(w, Composition{2, 1}),
              (Multiset{{from_word(r2, {2}), 1},
                        {from_word(r2, {0}), 2},
                        {from_word(r2, {1}), 1}}));
    EXPECT_EQ(paths_with_ascomp(w, Composition{1, 2}),
              (Multiset{{from_word(r2, {2}), 1},
                        {from_word(r2, {0}), 2},
                        {from_word(r2, {1}), 1}}));
    EXPECT_EQ(paths_with_ascomp(w, Composition{1, 1, 1}),
              (Multiset{{from_word(r2, {0}), 1}, {from_word(r2, {1}), 1}}));
    EXPECT_EQ(paths_with_ascomp(w, Composition{}), (Multiset{{w, 1}}));
}

TEST(StripGraphs, StripsEndingGrassmannianStartGrassmannian) {
    for (Int k : {2, 3}) {
        const Rank rank(k);
        const Int lmax = 6;
        for (const auto& level : elements_up_to(rank, lmax))
            for (const auto& w : level)
                for (Int i = 1; i <= 3; ++i)
                    for (const auto& [v, mult] : strong_strip_targets(w, i))
                        if (is_grassmannian(v))
                            EXPECT_TRUE(is_grassmannian(w))
                                << "strip of size " << i << " ends Grassmannian but starts not";
    }
}

TEST(StripGraphs, NoEqualConsecutiveLabels) {
    // two consecutive edges never carry the same label; this is what makes
    // strict-descent strips and ascent-composition-[i] paths coincide
    for (Int k : {2, 3}) {
        for (const auto& level : elements_up_to(Rank(k), 6))
            for (const auto& x : level)
                for (const auto& e1 : strong_edges_from(x))
                    for (const auto& e2 : strong_edges_from(e1.target))
                        ASSERT_NE(e1.label, e2.label);
    }
}

TEST(StripGraphs, BruhatCoversIncludeUnmarkedOnes) {
    // Covers inside W_0 carry no strong edge but are Bruhat covers.
    const Rank r2(2);
    const AffinePerm v = simple(r2, 1);
    EXPECT_TRUE(strong_edges_from(v).empty());
    const auto& covers = bruhat_covers(v);
    ASSERT_EQ(covers.size(), 1u);
    EXPECT_TRUE(covers[0].is_identity());
}
