#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include <sncore/bounds.hpp>

using namespace sncore;

TEST(Lemma1, Examples)
{
    for (int k = 1; k <= 8; ++k) {
        auto r = check_lemma1(k, 1);
        EXPECT_EQ(r.lhs, k);
        EXPECT_EQ(r.rhs, k + 1);
        EXPECT_TRUE(r.holds);
    }
    auto two = check_lemma1(2, 2);
    EXPECT_EQ(two.lhs, 5);
    EXPECT_EQ(two.rhs, 6);
    EXPECT_TRUE(two.holds);
    ASSERT_TRUE(two.slack.has_value());
    EXPECT_EQ(*two.slack, Rational(5, 6));
    EXPECT_THROW(check_lemma1(0, 2), InvalidInput);
    EXPECT_THROW(check_lemma1(2, 0), InvalidInput);
}

TEST(Lemma1, HoldsOnSweep)
{
    for (int k = 1; k <= 10; ++k)
        for (int m = 1; m <= 40; ++m)
            ASSERT_TRUE(check_lemma1(k, m).holds) << k << " " << m;
}

TEST(Lemma2, Examples)
{
    // c_n(n): every partition of n except those with a hook of length n, i.e.
    // the n hooks (n-j, 1^j); computed here by filtering
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t cores = 0;
        for (const auto& parts : oracle::partitions(n))
            cores += oracle::is_core(parts, n) ? 1 : 0;
        auto r = check_lemma2(n, n);
        EXPECT_EQ(r.lhs, Rational(partition_count(n) - BigInt(cores)));
        EXPECT_EQ(r.rhs, n + 1);
        EXPECT_TRUE(r.holds);
    }
    auto five = check_lemma2(5, 3);
    EXPECT_EQ(five.lhs, 7 - 1); // the only 3-core of 5 is (3,1,1)
    EXPECT_TRUE(five.holds);
    EXPECT_THROW(check_lemma2(3, 4), InvalidInput);
    EXPECT_THROW(check_lemma2(3, 0), InvalidInput);
}

TEST(Lemma2, ThreeCoresOfFive)
{
    std::vector<Partition> cores;
    for (const auto& lambda : enumerate_partitions(5))
        if (is_k_core(lambda, 3))
            cores.push_back(lambda);
    std::vector<Partition> expected{Partition({3, 1, 1})};
    EXPECT_EQ(cores, expected);
}

TEST(Lemma2, HoldsOnSweep)
{
    for (int n = 1; n <= 60; ++n)
        for (int k = 1; k <= n; ++k)
            ASSERT_TRUE(check_lemma2(n, k).holds) << n << " " << k;
}

TEST(FiberIdentity, Examples)
{
    auto empty = check_fiber_identity(4, 7);
    EXPECT_EQ(empty.lhs, 0);
    EXPECT_EQ(empty.rhs, 0);
    EXPECT_TRUE(empty.holds);
    EXPECT_FALSE(empty.slack.has_value());

    auto six = check_fiber_identity(6, 3);
    EXPECT_EQ(six.comparison, Comparison::Equal);
    EXPECT_TRUE(six.holds);
    // c_3(6) by filter; c_3(3) = 0 (every partition of 3 has a 3-hook), c_3(0) = 1, p_3(2) = 9
    std::uint64_t cores6 = 0;
    for (const auto& parts : oracle::partitions(6))
        cores6 += oracle::is_core(parts, 3) ? 1 : 0;
    EXPECT_EQ(six.lhs, 11 - static_cast<long long>(cores6));
    EXPECT_EQ(six.rhs, 0 * 3 + 1 * 9);
}

TEST(FiberIdentity, ExactOnSweep)
{
    for (int n = 1; n <= 60; ++n)
        for (int k = 1; k <= n; ++k)
            ASSERT_TRUE(check_fiber_identity(n, k).holds) << n << " " << k;
}

TEST(Lemma3Report, KEqualsN)
{
    for (int n = 2; n <= 30; ++n) {
        auto r = lemma3_report(n, n, 0.4);
        ASSERT_TRUE(r.bound.has_value());
        EXPECT_TRUE(r.bound->holds);
        EXPECT_EQ(r.deficit_bound, Rational(BigInt(n + 1), partition_count(n)));
        EXPECT_EQ(*r.core_ratio, Rational(count_k_cores(n, n), partition_count(n)));
    }
}

TEST(Lemma3Report, FortyTwentyFive)
{
    auto r = lemma3_report(40, 25, 0.4);
    EXPECT_TRUE(r.qualifies);
    EXPECT_NEAR(0.4 * std::sqrt(40.0) * std::log(40.0), 9.3317, 1e-3);
    ASSERT_TRUE(r.core_ratio.has_value());
    EXPECT_EQ(*r.core_ratio, Rational(count_k_cores(40, 25), partition_count(40)));
    EXPECT_EQ(r.deficit_bound, Rational(BigInt(26) * partition_count(15), partition_count(40)));
    EXPECT_TRUE(r.bound->holds);

    EXPECT_FALSE(lemma3_report(40, 9, 0.4).qualifies);
}

TEST(Lemma3Report, RearrangedLemma2OnSweep)
{
    for (int n = 2; n <= 60; ++n)
        for (int k = 1; k <= n; ++k) {
            auto r = lemma3_report(n, k, 0.5);
            ASSERT_TRUE(r.bound.has_value());
            ASSERT_TRUE(r.bound->holds) << n << " " << k;
            ASSERT_EQ(Rational(1) - *r.core_ratio, r.bound->lhs);
        }
}

TEST(Lemma3Report, DeficitBoundEventuallySmall)
{
    for (int n = 20; n <= 50; ++n) {
        const Rational threshold(1, 10);
        bool dropped = false;
        for (int k = 1; k <= n; ++k)
            if (core_deficit_bound(n, k) < threshold)
                dropped = true;
        EXPECT_TRUE(dropped) << n;
        EXPECT_LT(core_deficit_bound(n, n), core_deficit_bound(n, n / 2));
    }
}

TEST(Lemma3Report, LargeNSkipsCoreCounts)
{
    auto r = lemma3_report(200, 30, 0.4);
    EXPECT_FALSE(r.bound.has_value());
    EXPECT_EQ(r.deficit_bound, Rational(BigInt(31) * partition_count(170), partition_count(200)));
    auto beyond = lemma3_report(200, 250, 0.4);
    ASSERT_TRUE(beyond.bound.has_value());
    EXPECT_EQ(*beyond.core_ratio, 1);
    EXPECT_EQ(beyond.deficit_bound, 0);
}

TEST(HrBracket, Values)
{
    auto one = hr_bracket_report(1);
    EXPECT_EQ(one.partitions, 1);
    EXPECT_NEAR(one.ratio, std::exp(-std::numbers::pi * std::sqrt(2.0 / 3.0)), 1e-12);
    EXPECT_NEAR(one.ratio, 0.0769, 5e-5);

    auto hundred = hr_bracket_report(100);
    EXPECT_EQ(hundred.partitions, BigInt(190569292));
    EXPECT_NEAR(hundred.ratio, 190569292.0 * 100 / std::exp(std::numbers::pi * std::sqrt(200.0 / 3.0)), 1e-9);

    double lo = 1e9, hi = 0;
    for (int m = 1; m <= 200; ++m) {
        auto r = hr_bracket_report(m);
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
    }
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi, 1.0);
    EXPECT_THROW(hr_bracket_report(0), InvalidInput);
}
