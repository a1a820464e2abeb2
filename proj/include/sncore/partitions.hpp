#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "types.hpp"

namespace sncore {

/// A partition stored as its weakly decreasing list of positive parts.
///
/// The empty part list is the unique partition of 0. Equality is equality of
/// part lists; `operator<=>` is plain lexicographic order on the parts, so the
/// canonical enumeration order (reverse-lexicographic) is `a > b`.
class Partition {
public:
    Partition() = default;

    /// Throws InvalidInput unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw InvalidInput("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidInput("partition parts must be weakly decreasing");
            size_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into canonical order and drops zero parts; negative parts are an error.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Parses the textual form "4,1"; "-" (or the empty string) is the empty partition.
    static Partition parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty() || text == "-")
            return {};
        std::vector<int> parts;
        while (true) {
            auto comma = text.find(',');
            auto field = trim(text.substr(0, comma));
            int value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw InvalidInput("malformed partition '" + std::string(text) + "'");
            parts.push_back(value);
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& part_vector() const noexcept { return parts_; }

    /// The integer being partitioned.
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); parts beyond the length read as 0.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    int multiplicity(int part) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    /// Exponent form (a_1^{b_1}, ..., a_h^{b_h}): distinct parts in decreasing
    /// order paired with their multiplicities.
    std::vector<std::pair<int, int>> exponent_form() const
    {
        std::vector<std::pair<int, int>> out;
        for (int part : parts_) {
            if (!out.empty() && out.back().first == part)
                ++out.back().second;
            else
                out.emplace_back(part, 1);
        }
        return out;
    }

    std::string str() const
    {
        if (parts_.empty())
            return "-";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) noexcept { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(std::span<const int> parts) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (int x : parts) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h ^ parts.size());
    }
    std::size_t operator()(const Partition& p) const noexcept { return (*this)(p.parts()); }
};

/// Comparator placing partitions in canonical (reverse-lexicographic) order.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept { return a > b; }
};

/// Calls `visit(std::span<const int>)` for every partition of n in canonical
/// order, (n) first and (1^n) last. The span is only valid during the call.
template <class Visitor>
void for_each_partition(int n, Visitor&& visit)
{
    if (n < 0)
        return;
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(n));
    if (n > 0)
        a.push_back(n);
    while (true) {
        visit(std::span<const int>(a));
        // rightmost part larger than 1
        std::size_t i = a.size();
        while (i > 0 && a[i - 1] == 1)
            --i;
        if (i == 0)
            return;
        --i;
        int remainder = static_cast<int>(a.size() - i - 1) + 1;
        int cap = --a[i];
        a.resize(i + 1);
        while (remainder > 0) {
            int take = std::min(cap, remainder);
            a.push_back(take);
            remainder -= take;
        }
    }
}

inline std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
    });
    return out;
}

namespace detail {

struct PartitionCountTable {
    std::shared_mutex mutex;
    std::vector<BigInt> values{BigInt(1)};
};

inline PartitionCountTable& partition_count_table()
{
    static PartitionCountTable table;
    return table;
}

} // namespace detail

/// p(n) by Euler's pentagonal-number recurrence. The memo table is process-wide,
/// grows on demand, and admits concurrent readers.
inline BigInt partition_count(int n)
{
    if (n < 0)
        return 0;
    auto& table = detail::partition_count_table();
    {
        std::shared_lock lock(table.mutex);
        if (static_cast<std::size_t>(n) < table.values.size())
            return table.values[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(table.mutex);
    auto& p = table.values;
    for (int m = static_cast<int>(p.size()); m <= n; ++m) {
        BigInt sum = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            if (g1 > m)
                break;
            int g2 = j * (3 * j + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                term += p[static_cast<std::size_t>(m - g2)];
            if (j % 2)
                sum += term;
            else
                sum -= term;
        }
        p.push_back(std::move(sum));
    }
    return p[static_cast<std::size_t>(n)];
}

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda.largest_part()), 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// Hook lengths by cell: row i holds the hooks of the cells in row i of the
/// Young diagram (0-based rows and columns).
using HookTable = std::vector<std::vector<int>>;

inline HookTable hook_lengths(const Partition& lambda)
{
    Partition conj = conjugate(lambda);
    HookTable table(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        auto& row = table[i];
        row.resize(static_cast<std::size_t>(lambda[i]));
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            row[static_cast<std::size_t>(j)] = arm + leg + 1;
        }
    }
    return table;
}

/// All hook lengths, sorted decreasing.
inline std::vector<int> hook_multiset(const Partition& lambda)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (const auto& row : hook_lengths(lambda))
        out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline BigInt factorial(int n)
{
    BigInt out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

/// z_mu = prod_i i^{m_i} m_i!, the order of the centralizer of a permutation
/// of cycle type mu.
inline BigInt centralizer_order(const Partition& mu)
{
    BigInt out = 1;
    for (auto [part, mult] : mu.exponent_form()) {
        for (int t = 0; t < mult; ++t)
            out *= part;
        out *= factorial(mult);
    }
    return out;
}

/// Strictly decreasing set of non-negative integers (first-column hook lengths
/// of a partition padded to `size()` rows).
class BetaSet {
public:
    BetaSet() = default;

    /// Throws InvalidInput unless `entries` is strictly decreasing and non-negative.
    explicit BetaSet(std::vector<int> entries) : entries_(std::move(entries))
    {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 0)
                throw InvalidInput("beta-set entries must be non-negative");
            if (i > 0 && entries_[i] >= entries_[i - 1])
                throw InvalidInput("beta-set entries must be strictly decreasing");
        }
    }

    std::span<const int> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool contains(int x) const noexcept
    {
        return std::binary_search(entries_.begin(), entries_.end(), x, std::greater<>());
    }

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<int> entries_;
};

inline BetaSet to_beta_set(const Partition& lambda, std::size_t size)
{
    if (size < lambda.length())
        throw InvalidInput("beta-set size " + std::to_string(size) + " is smaller than partition length " +
                           std::to_string(lambda.length()));
    std::vector<int> entries(size);
    for (std::size_t i = 0; i < size; ++i)
        entries[i] = lambda[i] + static_cast<int>(size - 1 - i);
    return BetaSet(std::move(entries));
}

inline Partition from_beta_set(const BetaSet& beta)
{
    auto e = beta.entries();
    std::vector<int> parts;
    parts.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        int part = e[i] - static_cast<int>(e.size() - 1 - i);
        if (part == 0)
            break;
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

} // namespace sncore
