#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include <sncore/padic.hpp>

using namespace sncore;

TEST(StarMap, Examples)
{
    EXPECT_EQ(star_map(Partition({4, 3}), 2), Partition({3, 1, 1, 1, 1}));
    EXPECT_EQ(star_map(Partition({6, 2}), 3), Partition({2, 2, 2, 2}));
    EXPECT_EQ(star_map(Partition({5, 3, 1}), 2), Partition({5, 3, 1}));
    EXPECT_THROW(star_map(Partition({2}), 6), InvalidInput);
}

TEST(StarMap, IdempotentSizePreservingAndLandsInOmega)
{
    for (int n = 0; n <= 20; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            Partition mu(parts);
            for (int p : {2, 3, 5}) {
                Partition s = star_map(mu, p);
                ASSERT_EQ(s.part_vector(), oracle::star(parts, p));
                ASSERT_EQ(s.size(), n);
                ASSERT_TRUE(is_in_omega_p(s, p));
                ASSERT_EQ(star_map(s, p), s);
            }
        }
    }
}

TEST(IsInOmega, Examples)
{
    EXPECT_TRUE(is_in_omega_p(Partition({1, 1, 1}), 2));
    EXPECT_FALSE(is_in_omega_p(Partition({4, 3}), 2));
    EXPECT_FALSE(is_in_omega_p(Partition({6, 2}), 3));
    EXPECT_TRUE(is_in_omega_p(Partition(), 5));
}

TEST(PAdicDecomposition, DigitsReconstruct)
{
    for (int p : {2, 3, 5, 7}) {
        for (long long b = 0; b <= 500; ++b) {
            auto d = p_adic_decomposition(b, p);
            ASSERT_EQ(d.value(), b);
            for (int f : d.digits) {
                ASSERT_GE(f, 0);
                ASSERT_LT(f, p);
            }
            if (b > 0)
                ASSERT_NE(d.digits.back(), 0);
        }
    }
    EXPECT_EQ(p_adic_decomposition(6, 2).digits, (std::vector<int>{0, 1, 1}));
}

TEST(EnumerateFiber, Examples)
{
    EXPECT_EQ(enumerate_fiber(Partition({7}), 2), std::vector<Partition>{Partition({7})});
    std::vector<Partition> expected{Partition({2, 1}), Partition({1, 1, 1})};
    EXPECT_EQ(enumerate_fiber(Partition({1, 1, 1}), 2), expected);
    EXPECT_THROW(enumerate_fiber(Partition({2, 1}), 2), InvalidInput);
}

TEST(EnumerateFiber, MatchesStarMapFilter)
{
    for (int n = 0; n <= 12; ++n) {
        auto all = oracle::partitions(n);
        for (int p : {2, 3}) {
            std::size_t covered = 0;
            for (const auto& parts : all) {
                Partition lambda(parts);
                if (!is_in_omega_p(lambda, p))
                    continue;
                std::vector<Partition> filtered;
                for (const auto& mu : all)
                    if (oracle::star(mu, p) == parts)
                        filtered.emplace_back(mu);
                auto fiber = enumerate_fiber(lambda, p);
                ASSERT_EQ(fiber, filtered) << lambda.str() << " p=" << p;
                ASSERT_EQ(fiber_size(lambda, p), BigInt(fiber.size()));
                covered += fiber.size();
            }
            ASSERT_EQ(covered, all.size());
        }
    }
}

TEST(EnumerateFiber, FibersPartitionAllClasses)
{
    for (int n = 0; n <= 14; ++n) {
        for (int p : {2, 3, 5}) {
            BigInt total = 0;
            for (const auto& lambda : enumerate_partitions(n))
                if (is_in_omega_p(lambda, p))
                    total += fiber_size(lambda, p);
            ASSERT_EQ(total, partition_count(n));
        }
    }
}

TEST(LambdaBar, Examples)
{
    EXPECT_EQ(lambda_bar(Partition({5, 3, 1}), 2), Partition({5, 3, 1}));
    EXPECT_EQ(lambda_bar(Partition({3, 3, 3, 3, 3}), 2), Partition({12, 3}));
    EXPECT_EQ(lambda_bar(Partition({1, 1, 1, 1, 1, 1}), 2), Partition({4, 2}));
    EXPECT_THROW(lambda_bar(Partition({4}), 2), InvalidInput);
}

TEST(LambdaBar, FixedPointAndFiberMembership)
{
    for (int n = 0; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (int p : {2, 3, 5}) {
                if (!is_in_omega_p(lambda, p))
                    continue;
                ASSERT_EQ(star_map(lambda, p), lambda);
                ASSERT_EQ(star_map(lambda_bar(lambda, p), p), lambda);
            }
        }
    }
}

TEST(TheoremParams, ConstantMustExceedThreshold)
{
    EXPECT_NEAR(kMinTheoremConstant, 0.3898484, 1e-7);
    EXPECT_NO_THROW(TheoremParams(2, 0.38985, 10));
    EXPECT_THROW(TheoremParams(2, kMinTheoremConstant, 10), InvalidInput);
    EXPECT_THROW(TheoremParams(2, 0.3, 10), InvalidInput);
    EXPECT_THROW(TheoremParams(4, 0.5, 10), InvalidInput);
    EXPECT_NO_THROW(TheoremParams(2, 0.39, 10));
}

TEST(TheoremHypothesis, Examples)
{
    // (n) alone: a_1 = n, b_1 = 1; n >= c sqrt(n) ln n for c = 0.4 at every n tested
    for (int n = 3; n <= 60; n += 2) {
        auto w = theorem_hypothesis(Partition({n}), TheoremParams(2, 0.4, n));
        ASSERT_TRUE(w.has_value()) << n;
        EXPECT_EQ(*w, (HypothesisWitness{1, 0}));
    }
    auto ones = theorem_hypothesis(Partition({1, 1, 1, 1}), TheoremParams(2, 0.4, 4));
    ASSERT_TRUE(ones.has_value());
    EXPECT_EQ(*ones, (HypothesisWitness{1, 2}));

    EXPECT_THROW(theorem_hypothesis(Partition({1}), TheoremParams(2, 0.4, 1)), InvalidInput);
    EXPECT_THROW(theorem_hypothesis(Partition({2, 2}), TheoremParams(2, 0.4, 4)), InvalidInput);
}

TEST(TheoremHypothesis, EquivalentToLambdaBarLargestPart)
{
    for (int n = 2; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (int p : {2, 3}) {
                if (!is_in_omega_p(lambda, p))
                    continue;
                for (double c : {0.39, 0.5, 1.0}) {
                    TheoremParams params(p, c, n);
                    const bool by_bar = lambda_bar(lambda, p).largest_part() >= params.threshold();
                    ASSERT_EQ(theorem_hypothesis(lambda, params).has_value(), by_bar)
                        << lambda.str() << " p=" << p << " c=" << c;
                }
            }
        }
    }
}

TEST(TheoremHypothesis, WitnessIsValid)
{
    for (int n = 2; n <= 16; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            if (!is_in_omega_p(lambda, 3))
                continue;
            TheoremParams params(3, 0.45, n);
            auto w = theorem_hypothesis(lambda, params);
            if (!w)
                continue;
            auto [part, mult] = lambda.exponent_form()[static_cast<std::size_t>(w->index - 1)];
            const int power = static_cast<int>(std::pow(3, w->s));
            ASSERT_LE(power, mult);
            ASSERT_GT(power * 3, mult);
            ASSERT_GE(part * power, params.threshold() * (1 - 1e-9));
        }
    }
}

TEST(CorollaryHypothesis, Examples)
{
    EXPECT_TRUE(corollary_hypothesis(Partition({9}), TheoremParams(2, 0.4, 9)));
    EXPECT_NEAR(3.0 / (0.8 * std::log(9.0)), 1.70670, 1e-4);
    // four distinct parts at n = 10 is far over the bound
    EXPECT_FALSE(corollary_hypothesis(Partition({4, 3, 2, 1}), TheoremParams(5, 0.4, 10)));
    EXPECT_THROW(corollary_hypothesis(Partition({1}), TheoremParams(2, 0.4, 1)), InvalidInput);
}

TEST(CorollaryHypothesis, ImpliesTheoremHypothesis)
{
    for (int n = 2; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (int p : {2, 3}) {
                if (!is_in_omega_p(lambda, p))
                    continue;
                for (double c : {0.39, 0.5, 1.0}) {
                    TheoremParams params(p, c, n);
                    if (corollary_hypothesis(lambda, params))
                        ASSERT_TRUE(theorem_hypothesis(lambda, params).has_value()) << lambda.str();
                }
            }
        }
    }
}
