#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "types.hpp"

namespace sncore {

/// True iff no part of lambda is divisible by p (membership in Omega_p(n)).
inline bool is_in_omega_p(const Partition& lambda, int p)
{
    return std::none_of(lambda.begin(), lambda.end(), [p](int part) { return part % p == 0; });
}

/// mu*: every part p^k a with p not dividing a becomes p^k parts equal to a.
inline Partition star_map(const Partition& mu, int p)
{
    require_prime(p);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(mu.size()));
    for (int part : mu) {
        int copies = 1;
        while (part % p == 0) {
            part /= p;
            copies *= p;
        }
        parts.insert(parts.end(), static_cast<std::size_t>(copies), part);
    }
    return Partition::from_unsorted(std::move(parts));
}

/// Base-p digits f_0, ..., f_g of a non-negative integer, least significant
/// first; empty for zero.
struct PAdicDecomposition {
    int base = 2;
    std::vector<int> digits;

    long long value() const
    {
        long long v = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it)
            v = v * base + *it;
        return v;
    }
};

inline PAdicDecomposition p_adic_decomposition(long long b, int p)
{
    require_prime(p);
    if (b < 0)
        throw InvalidInput("p-adic decomposition needs a non-negative integer");
    PAdicDecomposition out{p, {}};
    for (; b > 0; b /= p)
        out.digits.push_back(static_cast<int>(b % p));
    return out;
}

namespace detail {

inline void require_omega(const Partition& lambda, int p)
{
    require_prime(p);
    if (!is_in_omega_p(lambda, p))
        throw InvalidInput("partition " + lambda.str() + " has a part divisible by " + std::to_string(p));
}

/// Every way to write b as a sum of powers of p, each as a weakly decreasing
/// list of powers.
inline std::vector<std::vector<int>> power_partitions(int b, int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_power) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int q = max_power; q >= 1; q /= p) {
            if (q > remaining)
                continue;
            current.push_back(q);
            self(self, remaining - q, q);
            current.pop_back();
        }
    };
    int top = 1;
    while (top <= b / p)
        top *= p;
    recurse(recurse, b, top);
    return out;
}

inline BigInt power_partition_count(int b, int p)
{
    // ways[j] = number of partitions of j into powers of p
    std::vector<BigInt> ways(static_cast<std::size_t>(b) + 1, 0);
    ways[0] = 1;
    for (long long q = 1; q <= b; q *= p)
        for (int j = static_cast<int>(q); j <= b; ++j)
            ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - q)];
    return ways[static_cast<std::size_t>(b)];
}

} // namespace detail

/// K_p(lambda) = { mu : mu* = lambda }, built per distinct part: the b copies of
/// a part a are grouped into blocks of p-power size, each block of p^k copies
/// fusing into a single part a p^k. Returned in canonical order.
inline std::vector<Partition> enumerate_fiber(const Partition& lambda, int p)
{
    detail::require_omega(lambda, p);
    std::vector<std::vector<int>> partial{{}};
    for (auto [part, mult] : lambda.exponent_form()) {
        auto choices = detail::power_partitions(mult, p);
        std::vector<std::vector<int>> next;
        next.reserve(partial.size() * choices.size());
        for (const auto& prefix : partial) {
            for (const auto& blocks : choices) {
                auto parts = prefix;
                for (int q : blocks)
                    parts.push_back(part * q);
                next.push_back(std::move(parts));
            }
        }
        partial = std::move(next);
    }
    std::vector<Partition> out;
    out.reserve(partial.size());
    for (auto& parts : partial)
        out.push_back(Partition::from_unsorted(std::move(parts)));
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

/// |K_p(lambda)| without materializing the fiber.
inline BigInt fiber_size(const Partition& lambda, int p)
{
    detail::require_omega(lambda, p);
    BigInt out = 1;
    for (auto [part, mult] : lambda.exponent_form())
        out *= detail::power_partition_count(mult, p);
    return out;
}

/// The element of K_p(lambda) read off the base-p digits of each multiplicity:
/// a part a with multiplicity b = sum f_t p^t contributes f_t parts a p^t.
inline Partition lambda_bar(const Partition& lambda, int p)
{
    detail::require_omega(lambda, p);
    std::vector<int> parts;
    for (auto [part, mult] : lambda.exponent_form()) {
        auto digits = p_adic_decomposition(mult, p).digits;
        long long scale = 1;
        for (int f : digits) {
            parts.insert(parts.end(), static_cast<std::size_t>(f), static_cast<int>(part * scale));
            scale *= p;
        }
    }
    return Partition::from_unsorted(std::move(parts));
}

/// Smallest admissible constant in the divisibility hypotheses, sqrt(3/2)/pi.
inline const double kMinTheoremConstant = std::sqrt(1.5) / std::numbers::pi;

/// Relative slack granted to real-valued threshold comparisons, always in
/// favour of accepting.
inline constexpr double kThresholdTolerance = 1e-9;

inline bool at_least(double lhs, double rhs)
{
    return lhs >= rhs - kThresholdTolerance * std::abs(rhs);
}

struct TheoremParams {
    int p = 2;
    double c = 0.4;
    int n = 2;

    /// Throws InvalidInput unless p is prime, n >= 1 and c > sqrt(3/2)/pi.
    TheoremParams(int prime, double constant, int size) : p(prime), c(constant), n(size)
    {
        require_prime(p);
        if (!(c > kMinTheoremConstant))
            throw InvalidInput("constant c = " + std::to_string(c) + " must exceed sqrt(3/2)/pi");
        if (n < 1)
            throw InvalidInput("n must be positive");
    }

    /// c sqrt(n) ln(n)
    double threshold() const { return c * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n)); }
};

/// (i, s): the i-th distinct part (1-based, parts in decreasing order) with
/// p^s <= b_i and a_i p^s >= c sqrt(n) ln(n).
struct HypothesisWitness {
    int index = 0;
    int s = 0;

    friend bool operator==(const HypothesisWitness&, const HypothesisWitness&) = default;
};

namespace detail {

inline void require_predicate_domain(const Partition& lambda, const TheoremParams& params)
{
    if (params.n < 2)
        throw InvalidInput("divisibility hypotheses need n >= 2");
    if (lambda.size() != params.n)
        throw InvalidInput("partition " + lambda.str() + " is not a partition of " + std::to_string(params.n));
    require_omega(lambda, params.p);
}

} // namespace detail

/// Returns the witness with the smallest index i, taking the largest s for
/// that part, or nullopt when no distinct part qualifies.
inline std::optional<HypothesisWitness> theorem_hypothesis(const Partition& lambda, const TheoremParams& params)
{
    detail::require_predicate_domain(lambda, params);
    const double threshold = params.threshold();
    int index = 0;
    for (auto [part, mult] : lambda.exponent_form()) {
        ++index;
        int s = 0;
        long long power = 1;
        while (power * params.p <= mult) {
            power *= params.p;
            ++s;
        }
        if (at_least(static_cast<double>(part) * static_cast<double>(power), threshold))
            return HypothesisWitness{index, s};
    }
    return std::nullopt;
}

/// h <= sqrt(n) / (c p ln(n)), h the number of distinct parts.
inline bool corollary_hypothesis(const Partition& lambda, const TheoremParams& params)
{
    detail::require_predicate_domain(lambda, params);
    const double n = params.n;
    const double bound = std::sqrt(n) / (params.c * params.p * std::log(n));
    return at_least(bound, static_cast<double>(lambda.exponent_form().size()));
}

} // namespace sncore
