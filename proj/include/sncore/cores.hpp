#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partitions.hpp"
#include "types.hpp"

namespace sncore {

namespace detail {

/// Visits every rim hook of length t in the partition with the given parts,
/// calling `visit(std::span<const int> remaining_parts, int leg_length)`.
/// Works on the beta-set of size length(parts): a bead x with x >= t and x - t
/// vacant is such a hook, and its leg length is the number of beads strictly
/// between x - t and x.
template <class Visitor>
void for_each_rim_hook(std::span<const int> parts, int t, Visitor&& visit)
{
    const int r = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < r; ++i)
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (r - 1 - i);

    std::vector<int> moved(parts.size());
    std::vector<int> out;
    out.reserve(parts.size());
    for (int i = 0; i < r; ++i) {
        const int x = beta[static_cast<std::size_t>(i)];
        const int y = x - t;
        if (y < 0)
            break;
        // first index whose bead lies strictly below y
        auto it = std::lower_bound(beta.begin() + i + 1, beta.end(), y, std::greater<>());
        if (it != beta.end() && *it == y)
            continue;
        const int pos = static_cast<int>(it - beta.begin());
        const int leg = pos - i - 1;

        std::size_t w = 0;
        for (int j = 0; j < r; ++j) {
            if (j == i)
                continue;
            if (j == pos)
                moved[w++] = y;
            moved[w++] = beta[static_cast<std::size_t>(j)];
        }
        if (pos == r)
            moved[w++] = y;

        out.clear();
        for (int j = 0; j < r; ++j) {
            int part = moved[static_cast<std::size_t>(j)] - (r - 1 - j);
            if (part == 0)
                break;
            out.push_back(part);
        }
        visit(std::span<const int>(out), leg);
    }
}

} // namespace detail

struct RimHookRemoval {
    Partition remaining;
    int leg_length = 0;

    friend bool operator==(const RimHookRemoval&, const RimHookRemoval&) = default;
};

/// Every partition reachable from `lambda` by removing one rim hook of exactly
/// `hook_length` cells, with that hook's leg length, in canonical order of the
/// remaining partition. Empty when no such hook exists.
inline std::vector<RimHookRemoval> remove_rim_hook(const Partition& lambda, int hook_length)
{
    if (hook_length < 1)
        throw InvalidInput("rim hook length must be positive");
    std::vector<RimHookRemoval> out;
    detail::for_each_rim_hook(lambda.parts(), hook_length, [&](std::span<const int> rest, int leg) {
        out.push_back({Partition(std::vector<int>(rest.begin(), rest.end())), leg});
    });
    std::sort(out.begin(), out.end(),
              [](const RimHookRemoval& a, const RimHookRemoval& b) { return a.remaining > b.remaining; });
    return out;
}

/// Ordered k-tuple of partitions.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components) : components_(std::move(components))
    {
        for (const auto& c : components_)
            total_ += c.size();
    }

    std::size_t k() const noexcept { return components_.size(); }
    int total() const noexcept { return total_; }
    const std::vector<Partition>& components() const noexcept { return components_; }
    const Partition& operator[](std::size_t i) const { return components_[i]; }

    /// "2,1|-|3"
    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (i)
                out += '|';
            out += components_[i].str();
        }
        return out;
    }

    static Multipartition parse(std::string_view text)
    {
        std::vector<Partition> parts;
        while (true) {
            auto bar = text.find('|');
            parts.push_back(Partition::parse(text.substr(0, bar)));
            if (bar == std::string_view::npos)
                break;
            text.remove_prefix(bar + 1);
        }
        return Multipartition(std::move(parts));
    }

    friend bool operator==(const Multipartition& a, const Multipartition& b) noexcept
    {
        return a.components_ == b.components_;
    }
    friend auto operator<=>(const Multipartition& a, const Multipartition& b) noexcept
    {
        return a.components_ <=> b.components_;
    }

private:
    std::vector<Partition> components_;
    int total_ = 0;
};

struct CoreResult {
    Partition core;
    int weight = 0;
    int k = 1;
};

/// Number of abacus beads used for core and quotient extraction: the smallest
/// positive multiple of k that is at least length(lambda).
inline std::size_t abacus_size(const Partition& lambda, int k)
{
    auto kk = static_cast<std::size_t>(k);
    std::size_t runs = (lambda.length() + kk - 1) / kk;
    return std::max<std::size_t>(runs, 1) * kk;
}

inline CoreResult k_core(const Partition& lambda, int k)
{
    if (k < 1)
        throw InvalidInput("k must be positive");
    BetaSet beta = to_beta_set(lambda, abacus_size(lambda, k));
    std::vector<int> beads_per_runner(static_cast<std::size_t>(k), 0);
    long long before = 0;
    for (int x : beta.entries()) {
        ++beads_per_runner[static_cast<std::size_t>(x % k)];
        before += x;
    }
    std::vector<int> settled;
    settled.reserve(beta.size());
    long long after = 0;
    for (int runner = 0; runner < k; ++runner) {
        for (int level = 0; level < beads_per_runner[static_cast<std::size_t>(runner)]; ++level) {
            settled.push_back(runner + level * k);
            after += runner + level * k;
        }
    }
    std::sort(settled.begin(), settled.end(), std::greater<>());
    return {from_beta_set(BetaSet(std::move(settled))), static_cast<int>((before - after) / k), k};
}

/// True iff lambda has no hook of length divisible by k, i.e. no bead of its
/// beta-set can slide k positions toward zero.
inline bool is_k_core(const Partition& lambda, int k)
{
    if (k < 1)
        throw InvalidInput("k must be positive");
    BetaSet beta = to_beta_set(lambda, lambda.length());
    for (int x : beta.entries())
        if (x >= k && !beta.contains(x - k))
            return false;
    return true;
}

/// The k-quotient: component i is read off abacus runner i (beads at positions
/// congruent to i mod k), with beta-set size normalized by abacus_size. Any
/// multiple of k as bead count yields the same tuple.
inline Multipartition k_quotient(const Partition& lambda, int k)
{
    if (k < 1)
        throw InvalidInput("k must be positive");
    BetaSet beta = to_beta_set(lambda, abacus_size(lambda, k));
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(k));
    for (int x : beta.entries())
        levels[static_cast<std::size_t>(x % k)].push_back(x / k);
    std::vector<Partition> comps;
    comps.reserve(levels.size());
    for (auto& runner : levels)
        comps.push_back(from_beta_set(BetaSet(std::move(runner))));
    return Multipartition(std::move(comps));
}

/// Inverse of (k_core, k_quotient).
inline Partition from_core_and_quotient(const Partition& core, const Multipartition& quotient)
{
    const int k = static_cast<int>(quotient.k());
    if (k < 1)
        throw InvalidInput("quotient must have at least one component");
    if (!is_k_core(core, k))
        throw InvalidInput("partition " + core.str() + " is not a " + std::to_string(k) + "-core");
    const int m = quotient.total();
    // Enough beads that every runner carries at least m of them.
    const std::size_t r = abacus_size(core, k) + static_cast<std::size_t>(k) * static_cast<std::size_t>(m);
    BetaSet core_beta = to_beta_set(core, r);
    std::vector<int> per_runner(static_cast<std::size_t>(k), 0);
    for (int x : core_beta.entries())
        ++per_runner[static_cast<std::size_t>(x % k)];
    std::vector<int> beads;
    beads.reserve(r);
    for (int runner = 0; runner < k; ++runner) {
        const auto count = static_cast<std::size_t>(per_runner[static_cast<std::size_t>(runner)]);
        BetaSet levels = to_beta_set(quotient[static_cast<std::size_t>(runner)], count);
        for (int level : levels.entries())
            beads.push_back(runner + level * k);
    }
    std::sort(beads.begin(), beads.end(), std::greater<>());
    return from_beta_set(BetaSet(std::move(beads)));
}

/// Largest n for which count_k_cores tabulates by full enumeration without
/// complaint; larger n still works but costs p(n) hook scans.
inline constexpr int kCoreEnumerationLimit = 60;

namespace detail {

struct CoreCountTables {
    std::shared_mutex mutex;
    // counts[n][k] for 1 <= k <= n
    std::map<int, std::vector<std::uint64_t>> counts;
};

inline CoreCountTables& core_count_tables()
{
    static CoreCountTables tables;
    return tables;
}

/// One enumeration of P(n) yields c_k(n) for every k <= n: a partition is a
/// k-core iff none of its hook lengths is a multiple of k.
inline std::vector<std::uint64_t> tabulate_core_counts(int n)
{
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> conj;
    std::vector<char> present(static_cast<std::size_t>(n) + 1);
    for_each_partition(n, [&](std::span<const int> parts) {
        std::fill(present.begin(), present.end(), 0);
        const int width = parts.empty() ? 0 : parts[0];
        conj.assign(static_cast<std::size_t>(width), 0);
        for (int part : parts)
            for (int j = 0; j < part; ++j)
                ++conj[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int j = 0; j < parts[i]; ++j)
                present[static_cast<std::size_t>(parts[i] - j + conj[static_cast<std::size_t>(j)] -
                                                 static_cast<int>(i) - 1)] = 1;
        for (int k = 1; k <= n; ++k) {
            bool core = true;
            for (int h = k; h <= n && core; h += k)
                core = !present[static_cast<std::size_t>(h)];
            if (core)
                ++counts[static_cast<std::size_t>(k)];
        }
    });
    return counts;
}

} // namespace detail

/// c_k(n), the number of k-core partitions of n, by enumeration of P(n) and the
/// hook criterion. All k for a given n are tabulated together and cached.
inline BigInt count_k_cores(int n, int k)
{
    if (k < 1)
        throw InvalidInput("k must be positive");
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    if (k > n)
        return partition_count(n);
    auto& tables = detail::core_count_tables();
    {
        std::shared_lock lock(tables.mutex);
        if (auto it = tables.counts.find(n); it != tables.counts.end())
            return it->second[static_cast<std::size_t>(k)];
    }
    auto counts = detail::tabulate_core_counts(n);
    std::unique_lock lock(tables.mutex);
    auto [it, inserted] = tables.counts.emplace(n, std::move(counts));
    return it->second[static_cast<std::size_t>(k)];
}

namespace detail {

struct MultipartitionSeries {
    std::shared_mutex mutex;
    std::map<int, std::vector<BigInt>> by_k;
};

inline MultipartitionSeries& multipartition_series()
{
    static MultipartitionSeries series;
    return series;
}

/// Coefficients 0..m of (sum_j p(j) q^j)^k by repeated truncated convolution.
inline std::vector<BigInt> multipartition_coefficients(int k, int m)
{
    const auto len = static_cast<std::size_t>(m) + 1;
    std::vector<BigInt> base(len);
    for (std::size_t j = 0; j < len; ++j)
        base[j] = partition_count(static_cast<int>(j));
    std::vector<BigInt> acc(len, 0);
    acc[0] = 1;
    for (int factor = 0; factor < k; ++factor) {
        std::vector<BigInt> next(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (acc[i] == 0)
                continue;
            for (std::size_t j = 0; i + j < len; ++j)
                next[i + j] += acc[i] * base[j];
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace detail

/// p_k(m), the number of k-tuples of partitions with total size m. Series are
/// cached per k and extended by doubling.
inline BigInt multipartition_count(int k, int m)
{
    if (k < 1)
        throw InvalidInput("k must be positive");
    if (m < 0)
        return 0;
    auto& series = detail::multipartition_series();
    {
        std::shared_lock lock(series.mutex);
        if (auto it = series.by_k.find(k); it != series.by_k.end() && static_cast<std::size_t>(m) < it->second.size())
            return it->second[static_cast<std::size_t>(m)];
    }
    std::unique_lock lock(series.mutex);
    auto& coeffs = series.by_k[k];
    if (static_cast<std::size_t>(m) >= coeffs.size()) {
        int target = std::max(m, 2 * static_cast<int>(coeffs.size()));
        coeffs = detail::multipartition_coefficients(k, target);
    }
    return coeffs[static_cast<std::size_t>(m)];
}

/// All k-tuples of partitions with total size m, ordered by component sizes
/// (first component largest first) and then canonically within components.
inline std::vector<Multipartition> enumerate_multipartitions(int k, int m)
{
    if (k < 1)
        throw InvalidInput("k must be positive");
    std::vector<Multipartition> out;
    if (m < 0)
        return out;
    std::vector<Partition> current;
    auto recurse = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == k - 1) {
            for (auto& last : enumerate_partitions(remaining)) {
                current.push_back(std::move(last));
                out.emplace_back(current);
                current.pop_back();
            }
            return;
        }
        for (int size = remaining; size >= 0; --size) {
            for (auto& part : enumerate_partitions(size)) {
                current.push_back(std::move(part));
                self(self, slot + 1, remaining - size);
                current.pop_back();
            }
        }
    };
    recurse(recurse, 0, m);
    return out;
}

/// The node-adding map used to show p_k(m) <= (k+1) p_k(m-1). With h the last
/// nonempty component of `lambda` (h = 0 when all are empty), the image is:
/// lambda^h with a node appended to its last row, lambda^h with a new
/// single-node row, and every component after h with one node added (each is
/// empty, so it becomes (1)). Components are numbered from 1 here as in the
/// tuple (lambda^1, ..., lambda^k).
inline std::vector<Multipartition> lemma1_cover_map(const Multipartition& lambda)
{
    const auto k = lambda.k();
    if (k == 0)
        throw InvalidInput("multipartition must have at least one component");
    std::size_t h = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (!lambda[i].empty())
            h = i + 1;

    std::vector<Multipartition> out;
    auto with_component = [&](std::size_t index, Partition replacement) {
        auto comps = lambda.components();
        comps[index] = std::move(replacement);
        out.emplace_back(std::move(comps));
    };
    if (h > 0) {
        const Partition& last = lambda[h - 1];
        std::vector<int> parts = last.part_vector();
        const std::size_t rows = parts.size();
        if (rows == 1 || parts[rows - 1] < parts[rows - 2]) {
            auto grown = parts;
            ++grown.back();
            with_component(h - 1, Partition(std::move(grown)));
        }
        parts.push_back(1);
        with_component(h - 1, Partition(std::move(parts)));
    }
    for (std::size_t i = h; i < k; ++i)
        with_component(i, Partition{1});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sncore
