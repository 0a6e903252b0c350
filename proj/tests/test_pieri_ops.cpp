#include "nilcox/pieri_ops.hpp"

#include <gtest/gtest.h>

using namespace nilcox;

TEST(PieriOps, UExamples) {
    const Rank r2(2);
    const NilCoxElem u0 = NilCoxElem::basis(simple(r2, 0));
    const NilCoxElem u1 = U(1, u0);
    EXPECT_EQ(u1, NilCoxElem::basis(from_word(r2, {2, 0})) +
                      NilCoxElem::basis(from_word(r2, {1, 0})));
    EXPECT_EQ(U(0, u1), u1);
    EXPECT_TRUE(U(-1, u1).is_zero());
}

TEST(PieriOps, UAgreesWithWeakStrips) {
    for (Int k : {2, 3}) {
        const Rank rank(k);
        const Int lmax = 5;
        for (const auto& level : elements_up_to(rank, lmax))
            for (const auto& w : level)
                for (Int j = 0; j <= k; ++j) {
                    NilCoxElem expected(rank);
                    for (const auto& v : weak_strip_targets(w, j))
                        expected += NilCoxElem::basis(v);
                    ASSERT_EQ(U(j, NilCoxElem::basis(w)), expected);
                }
    }
}

TEST(PieriOps, DExamples) {
    const Rank r2(2);
    const NilCoxElem x = NilCoxElem::basis(from_word(r2, {0, 1, 2, 0}));
    NilCoxElem d1_expected(r2);
    d1_expected.add_term(from_word(r2, {0, 2, 0}), 2);
    d1_expected.add_term(from_word(r2, {0, 1, 2}), 1);
    d1_expected.add_term(from_word(r2, {1, 2, 0}), 2);
    d1_expected.add_term(from_word(r2, {0, 1, 0}), 1);
    EXPECT_EQ(D(1, x), d1_expected);

    const NilCoxElem y = NilCoxElem::basis(from_word(r2, {1, 2, 1, 0}));
    NilCoxElem d12_expected(r2);
    d12_expected.add_term(from_word(r2, {2}), 1);
    d12_expected.add_term(from_word(r2, {0}), 2);
    d12_expected.add_term(from_word(r2, {1}), 1);
    EXPECT_EQ(D_comp(Composition{1, 2}, y), d12_expected);
    EXPECT_EQ(D(0, x), x);
    EXPECT_TRUE(D(-2, x).is_zero());
}

TEST(PieriOps, DSingleEqualsDCompSingleton) {
    for (Int k : {2, 3}) {
        const Rank rank(k);
        const Int lmax = k == 2 ? 6 : 5;
        for (const auto& level : elements_up_to(rank, lmax))
            for (const auto& w : level) {
                const NilCoxElem uw = NilCoxElem::basis(w);
                for (Int i = 1; i <= 3; ++i)
                    ASSERT_EQ(D(i, uw), D_comp(Composition{i}, uw))
                        << "k=" << k << " i=" << i;
            }
    }
}

TEST(PieriOps, DhIdentity) {
    for (Int k : {2, 3, 4}) {
        const OperatorReport r = verify_dh_identity(Rank(k));
        EXPECT_TRUE(r.passed()) << r.failures.size() << " failures at k=" << k;
        EXPECT_GT(r.checked, 0);
    }
}

TEST(PieriOps, ProductRuleSmall) {
    const OperatorReport r = verify_product_rule(Rank(2), 5, 2);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checked, 0);
}

TEST(PieriOps, ProductRuleSinglePartCase) {
    // D_[i] then D_[j] equals D_[i+j] + D_[i,j]
    const Rank r2(2);
    for (const auto& level : elements_up_to(r2, 5))
        for (const auto& w : level) {
            const NilCoxElem uw = NilCoxElem::basis(w);
            for (Int i = 1; i <= 2; ++i)
                for (Int j = 1; j <= 2; ++j)
                    ASSERT_EQ(D_comp(Composition{j}, D_comp(Composition{i}, uw)),
                              D_comp(Composition{i + j}, uw) +
                                  D_comp(Composition{i, j}, uw));
        }
}

TEST(PieriOps, RefinementSumSmall) {
    const OperatorReport r = verify_refinement_sum(Rank(2), 5, 4);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.checked, 0);
}

TEST(PieriOps, CommutationSmall) {
    const OperatorReport r2 = verify_commutation(Rank(2), 4, 2, 2);
    EXPECT_TRUE(r2.passed());
    const OperatorReport r3 = verify_commutation(Rank(3), 3, 3, 3);
    EXPECT_TRUE(r3.passed());
    EXPECT_THROW(verify_commutation(Rank(2), 3, 2, 5), std::invalid_argument);
}

TEST(PieriOps, CommutationTrivialInstance) {
    // i = j = 1 on the unit: D_1 U_1 (1) = 1 via the e = 1 term.
    const Rank rank(2);
    const NilCoxElem one = NilCoxElem::scalar(rank, 1);
    EXPECT_EQ(D(1, U(1, one)), one);
    EXPECT_TRUE(U(1, D(1, one)).is_zero());
}

TEST(PieriOps, ModuleMorphismSmall) {
    const OperatorReport r = verify_module_morphism(Rank(2), 5);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(PieriOps, CommutingFamilySmall) {
    const OperatorReport r = verify_commuting_family(Rank(2), 4, 3);
    EXPECT_TRUE(r.passed());
}

TEST(PieriOps, BStabilitySmall) {
    const OperatorReport r = verify_b_stability(Rank(2), 4, 2);
    EXPECT_TRUE(r.passed());
    // D_1(s^(k)_lambda) stays in B
    for (Int n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n, 2))
            EXPECT_TRUE(is_in_B(D(1, noncomm_kschur(Rank(2), lam))).in_b);
}

TEST(PieriOps, PieriPerpExamples) {
    const Rank r2(2);
    // D_1(s_(2)) = s_(1) since s_(2) = h_2
    EXPECT_EQ(D(1, noncomm_kschur(r2, Partition{2})), noncomm_kschur(r2, Partition{1}));
    const auto strips = kschur_pieri_perp(r2, Partition{2}, 1);
    EXPECT_EQ(strips, (std::map<Partition, Int>{{Partition{1}, 1}}));
    EXPECT_TRUE(kschur_pieri_perp(r2, Partition{1}, 5).empty());
}

TEST(PieriOps, PieriPerpSweep) {
    for (Int k : {2, 3}) {
        const OperatorReport r = verify_pieri_perp(Rank(k), 4, 3);
        EXPECT_TRUE(r.passed()) << "k=" << k;
    }
}

TEST(PieriOps, HatExtendIdentity) {
    const Rank r2(2);
    NilCoxElem a = NilCoxElem::basis(from_word(r2, {0, 1})) +
                   3 * NilCoxElem::basis(from_word(r2, {1, 0})) -
                   NilCoxElem::basis(from_word(r2, {2}));
    const auto identity_map = [](const Partition& lam) {
        BExpansion b;
        b.basis = BExpansion::Basis::kschur;
        b.coeffs.emplace(lam, 1);
        return b;
    };
    EXPECT_EQ(hat_extend(identity_map, a), a);
}

TEST(PieriOps, HatExtendOfRestrictedDIsD) {
    // The restriction of D_i to B, extended back to A, is D_i again.
    const Rank r2(2);
    auto& table = KschurTable::instance(r2);
    for (Int i = 1; i <= 2; ++i) {
        const auto restricted = [&](const Partition& lam) {
            const auto memb = is_in_B(D(i, table.kschur(lam)));
            if (!memb.in_b) throw std::logic_error("restriction left B");
            BExpansion b;
            b.basis = BExpansion::Basis::kschur;
            b.coeffs = memb.kschur_expansion;
            return b;
        };
        for (const auto& level : elements_up_to(r2, 5))
            for (const auto& w : level) {
                const NilCoxElem uw = NilCoxElem::basis(w);
                ASSERT_EQ(hat_extend(restricted, uw), D(i, uw)) << "i=" << i;
            }
    }
}

TEST(PieriOps, HatExtendOfRestrictedDCompIsDComp) {
    const Rank r2(2);
    auto& table = KschurTable::instance(r2);
    const Composition j{1, 1};
    const auto restricted = [&](const Partition& lam) {
        const auto memb = is_in_B(D_comp(j, table.kschur(lam)));
        if (!memb.in_b) throw std::logic_error("restriction left B");
        BExpansion b;
        b.basis = BExpansion::Basis::kschur;
        b.coeffs = memb.kschur_expansion;
        return b;
    };
    for (const auto& level : elements_up_to(r2, 5))
        for (const auto& w : level) {
            const NilCoxElem uw = NilCoxElem::basis(w);
            ASSERT_EQ(hat_extend(restricted, uw), D_comp(j, uw));
        }
}

TEST(PieriOps, HatExtendChecksDegreeConsistency) {
    const Rank r2(2);
    const auto bad_map = [](const Partition& lam) {
        BExpansion b;
        b.basis = BExpansion::Basis::kschur;
        // shifts degree by -|lambda|: inconsistent across degrees
        b.coeffs.emplace(Partition{}, 1);
        return b;
    };
    NilCoxElem a = NilCoxElem::basis(from_word(r2, {1, 0})) +
                   NilCoxElem::basis(from_word(r2, {1}));
    EXPECT_THROW(hat_extend(bad_map, a), std::logic_error);
}

TEST(PieriOps, OperatorReportCollectsAllFailures) {
    OperatorReport r;
    EXPECT_TRUE(r.passed());
    r.failures.push_back("x");
    r.failures.push_back("y");
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failures.size(), 2u);
}
