#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cores.hpp"
#include "padic.hpp"
#include "partitions.hpp"
#include "types.hpp"

namespace sncore {

enum class Comparison { LessEqual, Equal };

/// One exact comparison lhs (<= or ==) rhs. Parameters that do not apply stay
/// unset.
struct BoundReport {
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> m;
    std::optional<double> c;
    Rational lhs;
    Rational rhs;
    Comparison comparison = Comparison::LessEqual;
    bool holds = false;
    /// lhs / rhs, unset when rhs is zero.
    std::optional<Rational> slack;
};

namespace detail {

inline BoundReport make_report(Rational lhs, Rational rhs, Comparison cmp)
{
    BoundReport r;
    r.holds = cmp == Comparison::Equal ? lhs == rhs : lhs <= rhs;
    if (rhs != 0)
        r.slack = lhs / rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.comparison = cmp;
    return r;
}

} // namespace detail

/// p_k(m) <= (k+1) p_k(m-1)
inline BoundReport check_lemma1(int k, int m)
{
    if (k < 1 || m < 1)
        throw InvalidInput("lemma 1 needs k >= 1 and m >= 1");
    auto r = detail::make_report(Rational(multipartition_count(k, m)),
                                 Rational(BigInt(k + 1) * multipartition_count(k, m - 1)), Comparison::LessEqual);
    r.k = k;
    r.m = m;
    return r;
}

/// p(n) - c_k(n) <= (k+1) p(n-k), for 1 <= k <= n.
inline BoundReport check_lemma2(int n, int k)
{
    if (k < 1 || k > n)
        throw InvalidInput("lemma 2 needs 1 <= k <= n");
    auto r = detail::make_report(Rational(partition_count(n) - count_k_cores(n, k)),
                                 Rational(BigInt(k + 1) * partition_count(n - k)), Comparison::LessEqual);
    r.n = n;
    r.k = k;
    return r;
}

/// p(n) - c_k(n) == sum_{m=1}^{floor(n/k)} c_k(n - mk) p_k(m)
inline BoundReport check_fiber_identity(int n, int k)
{
    if (k < 1)
        throw InvalidInput("fiber identity needs k >= 1");
    if (n < 0)
        throw InvalidInput("fiber identity needs n >= 0");
    BigInt sum = 0;
    for (int m = 1; m * k <= n; ++m)
        sum += count_k_cores(n - m * k, k) * multipartition_count(k, m);
    auto r = detail::make_report(Rational(partition_count(n) - count_k_cores(n, k)), Rational(sum), Comparison::Equal);
    r.n = n;
    r.k = k;
    return r;
}

/// (k+1) p(n-k) / p(n), exact. Zero when k > n.
inline Rational core_deficit_bound(int n, int k)
{
    return Rational(BigInt(k + 1) * partition_count(n - k), partition_count(n));
}

struct Lemma3Report {
    /// lhs = 1 - c_k(n)/p(n), rhs = (k+1) p(n-k)/p(n). Unset when n exceeds
    /// the core enumeration limit.
    std::optional<BoundReport> bound;
    /// c_k(n)/p(n), under the same condition.
    std::optional<Rational> core_ratio;
    Rational deficit_bound;
    /// k >= c sqrt(n) ln(n)
    bool qualifies = false;
    int n = 0;
    int k = 0;
    double c = 0;
};

/// Exact intermediate quantities of the core-count lower bound for large k.
/// The final inequality involves an unspecified constant and is not evaluated.
inline Lemma3Report lemma3_report(int n, int k, double c, int enumeration_limit = kCoreEnumerationLimit)
{
    if (n < 2)
        throw InvalidInput("lemma 3 report needs n >= 2");
    if (k < 1)
        throw InvalidInput("lemma 3 report needs k >= 1");
    Lemma3Report out;
    out.n = n;
    out.k = k;
    out.c = c;
    out.deficit_bound = core_deficit_bound(n, k);
    out.qualifies = at_least(static_cast<double>(k),
                             c * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n)));
    if (n <= enumeration_limit || k > n) {
        const BigInt pn = partition_count(n);
        Rational ratio(count_k_cores(n, k), pn);
        auto r = detail::make_report(Rational(1) - ratio, out.deficit_bound, Comparison::LessEqual);
        r.n = n;
        r.k = k;
        r.c = c;
        out.bound = std::move(r);
        out.core_ratio = std::move(ratio);
    }
    return out;
}

struct HrBracket {
    int m = 0;
    BigInt partitions;
    /// p(m) m / exp(pi sqrt(2m/3)); empirical envelope for the constants of
    /// the Hardy-Ramanujan bracket.
    double ratio = 0;
};

inline HrBracket hr_bracket_report(int m)
{
    if (m < 1)
        throw InvalidInput("Hardy-Ramanujan bracket needs m >= 1");
    using Float = boost::multiprecision::cpp_bin_float_50;
    HrBracket out;
    out.m = m;
    out.partitions = partition_count(m);
    Float exponent = boost::multiprecision::sqrt(Float(2 * m) / 3) * boost::math::constants::pi<Float>();
    Float ratio = Float(out.partitions) * m / boost::multiprecision::exp(exponent);
    out.ratio = ratio.convert_to<double>();
    return out;
}

} // namespace sncore
