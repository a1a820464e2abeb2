#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include <sncore/partitions.hpp>

using namespace sncore;

namespace {

std::vector<int> to_vec(const Partition& p) { return p.part_vector(); }

} // namespace

TEST(Partition, RejectsNonCanonicalParts)
{
    EXPECT_THROW(Partition({1, 2}), InvalidInput);
    EXPECT_THROW(Partition({2, 0}), InvalidInput);
    EXPECT_NO_THROW(Partition({2, 2, 1}));
    EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 1}), Partition({3, 1, 1}));
}

TEST(Partition, TextualForm)
{
    EXPECT_EQ(Partition({4, 1}).str(), "4,1");
    EXPECT_EQ(Partition().str(), "-");
    EXPECT_EQ(Partition::parse("4,1"), Partition({4, 1}));
    EXPECT_EQ(Partition::parse("-"), Partition());
    EXPECT_EQ(Partition::parse(" 3, 3 ,1"), Partition({3, 3, 1}));
    EXPECT_THROW(Partition::parse("1,2"), InvalidInput);
    EXPECT_THROW(Partition::parse("3,,1"), InvalidInput);
    EXPECT_THROW(Partition::parse("x"), InvalidInput);
}

TEST(Partition, ExponentForm)
{
    Partition p({5, 5, 3, 1, 1, 1});
    std::vector<std::pair<int, int>> expected{{5, 2}, {3, 1}, {1, 3}};
    EXPECT_EQ(p.exponent_form(), expected);
    EXPECT_EQ(p.size(), 16);
}

TEST(EnumeratePartitions, SmallCases)
{
    auto zero = enumerate_partitions(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());

    std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(enumerate_partitions(4), four);
    EXPECT_EQ(enumerate_partitions(10).size(), 42u);
}

TEST(EnumeratePartitions, MatchesRecursiveOracleInOrder)
{
    for (int n = 0; n <= 18; ++n) {
        auto ours = enumerate_partitions(n);
        auto ref = oracle::partitions(n);
        ASSERT_EQ(ours.size(), ref.size()) << n;
        for (std::size_t i = 0; i < ref.size(); ++i)
            ASSERT_EQ(to_vec(ours[i]), ref[i]) << n;
        EXPECT_TRUE(std::is_sorted(ours.begin(), ours.end(), CanonicalOrder{}));
    }
}

TEST(PartitionCount, KnownValues)
{
    EXPECT_EQ(partition_count(0), 1);
    EXPECT_EQ(partition_count(10), 42);
    EXPECT_EQ(partition_count(100), BigInt(190569292));
    EXPECT_EQ(partition_count(-3), 0);
}

TEST(PartitionCount, MatchesSlowRecurrence)
{
    for (int n = 0; n <= 120; ++n)
        ASSERT_EQ(partition_count(n), BigInt(oracle::slow_partition_count(n))) << n;
}

TEST(PartitionCount, EqualsStreamLength)
{
    for (int n = 0; n <= 40; ++n) {
        std::size_t count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        ASSERT_EQ(BigInt(count), partition_count(n)) << n;
    }
}

TEST(Conjugate, Examples)
{
    EXPECT_EQ(conjugate(Partition()), Partition());
    EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
    EXPECT_EQ(conjugate(Partition({2, 2})), Partition({2, 2}));
}

TEST(Conjugate, IsAnInvolution)
{
    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, [&](std::span<const int> parts) {
            Partition p(std::vector<int>(parts.begin(), parts.end()));
            ASSERT_EQ(conjugate(conjugate(p)), p);
        });
}

TEST(HookLengths, Examples)
{
    auto one = hook_lengths(Partition({1}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], std::vector<int>{1});
    EXPECT_EQ(hook_multiset(Partition({2, 2})), (std::vector<int>{3, 2, 2, 1}));
    EXPECT_EQ(hook_multiset(Partition({3, 1})), (std::vector<int>{4, 2, 1, 1}));

    auto table = hook_lengths(Partition({3, 1}));
    EXPECT_EQ(table[0], (std::vector<int>{4, 2, 1}));
    EXPECT_EQ(table[1], (std::vector<int>{1}));
}

TEST(HookLengths, MatchArmLegOracleAndConjugateSymmetry)
{
    for (int n = 0; n <= 20; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            Partition p(parts);
            auto hooks = hook_multiset(p);
            ASSERT_EQ(hooks, oracle::hooks(parts));
            ASSERT_EQ(hooks.size(), static_cast<std::size_t>(n));
            ASSERT_EQ(hooks, hook_multiset(conjugate(p)));
        }
    }
}

TEST(CentralizerOrder, Examples)
{
    EXPECT_EQ(centralizer_order(Partition({1, 1, 1})), 6);
    EXPECT_EQ(centralizer_order(Partition({3})), 3);
    EXPECT_EQ(centralizer_order(Partition({2, 1, 1})), 4);
    EXPECT_EQ(centralizer_order(Partition()), 1);
}

TEST(CentralizerOrder, ClassEquation)
{
    for (int n = 0; n <= 15; ++n) {
        const BigInt order = factorial(n);
        BigInt sum = 0;
        for (const auto& mu : enumerate_partitions(n)) {
            const BigInt z = centralizer_order(mu);
            ASSERT_EQ(order % z, 0);
            sum += order / z;
        }
        EXPECT_EQ(sum, order) << n;
    }
}

TEST(BetaSet, Examples)
{
    EXPECT_EQ(to_beta_set(Partition(), 3), BetaSet({2, 1, 0}));
    EXPECT_EQ(to_beta_set(Partition({4, 1}), 2), BetaSet({5, 1}));
    EXPECT_EQ(from_beta_set(BetaSet({5, 1})), Partition({4, 1}));
    EXPECT_THROW(to_beta_set(Partition({2, 1, 1}), 2), InvalidInput);
    EXPECT_THROW(BetaSet({1, 1}), InvalidInput);
    EXPECT_THROW(BetaSet({0, 1}), InvalidInput);
}

TEST(BetaSet, RoundTrip)
{
    for (int n = 0; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (std::size_t r = lambda.length(); r <= lambda.length() + 5; ++r) {
                if (r == 0)
                    continue;
                BetaSet beta = to_beta_set(lambda, r);
                ASSERT_EQ(beta.size(), r);
                for (std::size_t i = 0; i < r; ++i)
                    ASSERT_EQ(beta.entries()[i], lambda[i] + static_cast<int>(r - 1 - i));
                ASSERT_EQ(from_beta_set(beta), lambda);
            }
        }
    }
}
