#include "nilcox/affine_perm.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nilcox;

namespace {

AffinePerm random_element(Rank rank, Int max_len, std::mt19937& gen) {
    std::uniform_int_distribution<Int> len_dist(0, max_len);
    std::uniform_int_distribution<Int> gen_dist(0, rank.k());
    AffinePerm w = identity(rank);
    const Int steps = len_dist(gen);
    for (Int s = 0; s < steps; ++s) w = multiply(simple(rank, gen_dist(gen)), w);
    return w;
}

// Independent oracle: number of partitions of n with parts <= k, by the
// classic bounded-parts recurrence.
Int bounded_partition_count(Int n, Int k) {
    std::vector<Int> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (Int part = 1; part <= k; ++part)
        for (Int m = part; m <= n; ++m) dp[m] += dp[m - part];
    return dp[static_cast<std::size_t>(n)];
}

} // namespace

TEST(AffinePerm, IdentityWindow) {
    EXPECT_EQ(identity(Rank(2)).window(), (std::vector<Int>{1, 2, 3}));
    EXPECT_EQ(identity(Rank(3)).window(), (std::vector<Int>{1, 2, 3, 4}));
    EXPECT_EQ(identity(Rank(2)).length(), 0);
}

TEST(AffinePerm, SimpleGenerators) {
    EXPECT_EQ(simple(Rank(2), 1).window(), (std::vector<Int>{2, 1, 3}));
    // s_0(1) = 0 and s_0(3) = s_0(0) + 3 = 4
    EXPECT_EQ(simple(Rank(2), 0).window(), (std::vector<Int>{0, 2, 4}));
    for (Int k = 1; k <= 4; ++k)
        for (Int i = 0; i <= k; ++i) {
            const AffinePerm s = simple(Rank(k), i);
            EXPECT_TRUE(multiply(s, s).is_identity());
            EXPECT_EQ(s.length(), 1);
        }
    EXPECT_THROW(simple(Rank(2), 3), std::invalid_argument);
    EXPECT_THROW(simple(Rank(2), -1), std::invalid_argument);
}

TEST(AffinePerm, ApplyMarkingExample) {
    const Rank r2(2);
    const AffinePerm y = from_word(r2, {1, 2, 0}); // rightmost letter first
    EXPECT_EQ(y.apply(1), -2);
    EXPECT_EQ(y.apply(4), 1);
    EXPECT_EQ(identity(r2).apply(17), 17);
}

TEST(AffinePerm, QuasiPeriodicity) {
    std::mt19937 gen(7);
    for (Int k : {2, 3}) {
        const Rank rank(k);
        for (int trial = 0; trial < 20; ++trial) {
            const AffinePerm w = random_element(rank, 6, gen);
            for (Int n = -50; n <= 50; ++n)
                ASSERT_EQ(w.apply(n + k + 1), w.apply(n) + k + 1);
        }
    }
}

TEST(AffinePerm, Transpositions) {
    const Rank r2(2);
    EXPECT_EQ(transposition(r2, 0, 1), simple(r2, 0));
    EXPECT_EQ(transposition(r2, 1, 2), simple(r2, 1));
    EXPECT_EQ(transposition(r2, -4, 1), transposition(r2, -1, 4));
    const AffinePerm x = from_word(r2, {0, 1, 2, 0});
    const AffinePerm y = from_word(r2, {1, 2, 0});
    EXPECT_EQ(multiply(inverse(y), x), transposition(r2, -4, 1));
    EXPECT_THROW(transposition(r2, 0, 3), std::invalid_argument);
    EXPECT_THROW(transposition(r2, 2, 1), std::invalid_argument);
}

TEST(AffinePerm, MultiplyAndLength) {
    const Rank r2(2);
    const AffinePerm w = multiply(simple(r2, 1), simple(r2, 0));
    EXPECT_EQ(w.window(), (std::vector<Int>{0, 1, 5}));
    EXPECT_EQ(w.length(), 2);
    EXPECT_EQ(from_word(r2, {0, 1, 2, 0}).length(), 4);
    EXPECT_THROW(multiply(identity(Rank(2)), identity(Rank(3))), std::invalid_argument);
}

TEST(AffinePerm, InverseLengthProperty) {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const AffinePerm w = random_element(Rank(3), 8, gen);
        EXPECT_EQ(inverse(w).length(), w.length());
        EXPECT_TRUE(multiply(w, inverse(w)).is_identity());
    }
}

TEST(AffinePerm, LengthSubadditiveAndSimpleStep) {
    std::mt19937 gen(13);
    const Rank rank(2);
    for (int trial = 0; trial < 100; ++trial) {
        const AffinePerm v = random_element(rank, 5, gen);
        const AffinePerm w = random_element(rank, 5, gen);
        EXPECT_LE(multiply(v, w).length(), v.length() + w.length());
        for (Int i = 0; i <= rank.k(); ++i) {
            const Int d = multiply(simple(rank, i), w).length() - w.length();
            EXPECT_TRUE(d == 1 || d == -1);
        }
    }
}

TEST(AffinePerm, ReducedWordRoundTrip) {
    std::mt19937 gen(17);
    for (Int k : {2, 3}) {
        const Rank rank(k);
        for (int trial = 0; trial < 100; ++trial) {
            const AffinePerm w = random_element(rank, 7, gen);
            const auto word = reduced_word(w);
            EXPECT_EQ(static_cast<Int>(word.size()), w.length());
            EXPECT_EQ(from_word(rank, word), w);
        }
    }
}

TEST(AffinePerm, WindowInvariantsAfterProducts) {
    std::mt19937 gen(19);
    const Rank rank(3);
    const Int p = rank.period();
    for (int trial = 0; trial < 100; ++trial) {
        const AffinePerm w = random_element(rank, 8, gen);
        std::set<Int> residues;
        Int sum = 0;
        for (Int v : w.window()) {
            residues.insert(((v % p) + p) % p);
            sum += v;
        }
        EXPECT_EQ(static_cast<Int>(residues.size()), p);
        EXPECT_EQ(sum, p * (p + 1) / 2);
    }
    EXPECT_THROW(AffinePerm(rank, {1, 2, 3, 5}), std::invalid_argument);
    EXPECT_THROW(AffinePerm(rank, {1, 1, 4, 4}), std::invalid_argument);
}

TEST(AffinePerm, GrassmannianFactorization) {
    std::mt19937 gen(23);
    for (Int k : {2, 3}) {
        const Rank rank(k);
        for (int trial = 0; trial < 500; ++trial) {
            const AffinePerm w = random_element(rank, 8, gen);
            const auto [grass, fin] = grassmannian_factorize(w);
            EXPECT_TRUE(is_grassmannian(grass));
            EXPECT_TRUE(is_finite(fin));
            EXPECT_EQ(multiply(grass, fin), w);
            EXPECT_EQ(grass.length() + fin.length(), w.length());
        }
    }
    // already-minimal and W_0 cases
    const Rank r2(2);
    const AffinePerm s1 = simple(r2, 1);
    EXPECT_EQ(grassmannian_factorize(s1).first, identity(r2));
    EXPECT_EQ(grassmannian_factorize(s1).second, s1);
    const AffinePerm g = from_word(r2, {1, 0});
    EXPECT_EQ(grassmannian_factorize(g).first, g);
}

TEST(AffinePerm, CoreBijectionSmallCases) {
    const Rank r2(2);
    EXPECT_EQ(partition_to_grassmannian(r2, Partition{2}), from_word(r2, {1, 0}));
    EXPECT_EQ(partition_to_grassmannian(r2, Partition{1, 1}), from_word(r2, {2, 0}));
    EXPECT_EQ(partition_to_grassmannian(r2, Partition{}), identity(r2));
    EXPECT_EQ(grassmannian_to_partition(identity(r2)), Partition{});
    EXPECT_THROW(partition_to_grassmannian(r2, Partition{3}), std::invalid_argument);
    EXPECT_THROW(grassmannian_to_partition(simple(r2, 1)), std::invalid_argument);
}

TEST(AffinePerm, CoreShapesHaveNoForbiddenHooks) {
    for (Int k : {2, 3, 4}) {
        const Rank rank(k);
        for (Int n = 0; n <= 8; ++n)
            for (const auto& lam : partitions_of(n, k)) {
                const Core core = Core::from_k_bounded(rank, lam);
                EXPECT_TRUE(core.is_core());
                EXPECT_EQ(core.to_k_bounded(), lam);
            }
    }
}

TEST(AffinePerm, CoreBijectionRoundTrips) {
    for (Int k : {2, 3, 4}) {
        const Rank rank(k);
        for (Int n = 0; n <= 8; ++n)
            for (const auto& lam : partitions_of(n, k)) {
                const AffinePerm w = partition_to_grassmannian(rank, lam);
                EXPECT_EQ(w.length(), lam.sum());
                EXPECT_EQ(grassmannian_to_partition(w), lam);
            }
    }
}

TEST(AffinePerm, ElementsUpTo) {
    const Rank r2(2);
    const auto levels = elements_up_to(r2, 1);
    EXPECT_EQ(levels[0].size(), 1u);
    EXPECT_EQ(levels[1].size(), 3u);

    const auto levels4 = elements_up_to(r2, 4);
    std::vector<AffinePerm> grass4;
    for (const auto& w : levels4[4])
        if (is_grassmannian(w)) grass4.push_back(w);
    ASSERT_EQ(grass4.size(), 3u);
    const std::set<AffinePerm> expected = {from_word(r2, {1, 2, 1, 0}),
                                           from_word(r2, {0, 1, 2, 0}),
                                           from_word(r2, {0, 2, 1, 0})};
    EXPECT_EQ(std::set<AffinePerm>(grass4.begin(), grass4.end()), expected);
}

TEST(AffinePerm, GrassmannianCountMatchesPartitionCount) {
    for (Int k : {2, 3, 4}) {
        const auto levels = elements_up_to(Rank(k), 8);
        for (Int n = 0; n <= 8; ++n) {
            Int count = 0;
            for (const auto& w : levels[static_cast<std::size_t>(n)])
                if (is_grassmannian(w)) ++count;
            EXPECT_EQ(count, bounded_partition_count(n, k)) << "k=" << k << " n=" << n;
        }
    }
}

TEST(AffinePerm, ElementLimitGuard) {
    EXPECT_THROW(elements_up_to(Rank(3), 8, 10), ResourceLimitError);
}
