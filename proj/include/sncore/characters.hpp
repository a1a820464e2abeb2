#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cores.hpp"
#include "partitions.hpp"
#include "types.hpp"

namespace sncore {

/// Exact integer arithmetic for character values.
struct ExactArithmetic {
    using value_type = BigInt;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    void accumulate(value_type& acc, const value_type& v, bool negate) const
    {
        if (negate)
            acc -= v;
        else
            acc += v;
    }
};

/// Residues in [0, p-1]; no big integers are ever formed.
struct ModularArithmetic {
    using value_type = std::uint32_t;
    std::uint32_t p = 2;
    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    void accumulate(value_type& acc, value_type v, bool negate) const
    {
        acc = negate ? (acc + p - v) % p : (acc + v) % p;
    }
};

struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept { return PartitionHash{}(v); }
};

/// Memo table for Murnaghan-Nakayama sub-results with hit/miss counters.
/// A disabled cache never stores anything, so every lookup recomputes.
template <class Value>
class MemoCache {
public:
    struct Stats {
        std::uint64_t hits = 0;
        std::uint64_t misses = 0;
        std::size_t entries = 0;
    };

    explicit MemoCache(bool enabled = true) : enabled_(enabled) {}

    const Value* find(const std::vector<int>& key)
    {
        if (!enabled_) {
            ++stats_.misses;
            return nullptr;
        }
        auto it = table_.find(key);
        if (it == table_.end()) {
            ++stats_.misses;
            return nullptr;
        }
        ++stats_.hits;
        return &it->second;
    }

    void insert(std::vector<int> key, Value value)
    {
        if (enabled_)
            table_.emplace(std::move(key), std::move(value));
    }

    bool enabled() const noexcept { return enabled_; }
    Stats stats() const noexcept
    {
        Stats s = stats_;
        s.entries = table_.size();
        return s;
    }
    void clear()
    {
        table_.clear();
        stats_ = {};
    }

private:
    bool enabled_;
    Stats stats_;
    std::unordered_map<std::vector<int>, Value, IntVectorHash> table_;
};

namespace detail {

/// chi^alpha evaluated on the class whose remaining cycle lengths are
/// `cycles[consumed..]`, removing a rim hook of the first remaining length at
/// each step. When `key_by_suffix` is set the memo key carries the remaining
/// cycle lengths themselves (safe across different classes); otherwise only
/// the number consumed (valid while the class is fixed).
template <class Arith>
typename Arith::value_type mn_evaluate(const Arith& arith, std::span<const int> alpha, std::span<const int> cycles,
                                       std::size_t consumed, MemoCache<typename Arith::value_type>& cache,
                                       bool key_by_suffix)
{
    using Value = typename Arith::value_type;
    if (consumed == cycles.size())
        return alpha.empty() ? arith.one() : arith.zero();

    std::vector<int> key(alpha.begin(), alpha.end());
    key.push_back(0);
    if (key_by_suffix)
        key.insert(key.end(), cycles.begin() + static_cast<std::ptrdiff_t>(consumed), cycles.end());
    else
        key.push_back(static_cast<int>(consumed));
    if (const Value* hit = cache.find(key))
        return *hit;

    Value acc = arith.zero();
    for_each_rim_hook(alpha, cycles[consumed], [&](std::span<const int> rest, int leg) {
        Value sub = mn_evaluate(arith, rest, cycles, consumed + 1, cache, key_by_suffix);
        arith.accumulate(acc, sub, leg % 2 == 1);
    });
    cache.insert(std::move(key), acc);
    return acc;
}

inline void require_same_size(const Partition& alpha, const Partition& beta)
{
    if (alpha.size() != beta.size())
        throw InvalidInput("character index " + alpha.str() + " and class " + beta.str() +
                           " partition different integers");
}

} // namespace detail

/// chi^alpha_beta by the Murnaghan-Nakayama rule, largest cycle first. Passing
/// a cache shares sub-results across calls; otherwise a call-local memo is used.
inline BigInt mn_character(const Partition& alpha, const Partition& beta, MemoCache<BigInt>* cache = nullptr)
{
    detail::require_same_size(alpha, beta);
    MemoCache<BigInt> local;
    return detail::mn_evaluate(ExactArithmetic{}, alpha.parts(), beta.parts(), 0, cache ? *cache : local, true);
}

/// chi^alpha_beta mod p, computed natively in modular arithmetic.
inline std::uint32_t mn_character_mod(const Partition& alpha, const Partition& beta, int p,
                                      MemoCache<std::uint32_t>* cache = nullptr)
{
    detail::require_same_size(alpha, beta);
    require_prime(p);
    MemoCache<std::uint32_t> local;
    return detail::mn_evaluate(ModularArithmetic{static_cast<std::uint32_t>(p)}, alpha.parts(), beta.parts(), 0,
                               cache ? *cache : local, true);
}

/// Values chi^alpha_mu for every alpha of n, in canonical enumeration order.
/// With a modulus every value is a residue in [0, p-1].
struct CharColumn {
    int n = 0;
    Partition mu;
    std::optional<int> modulus;
    std::vector<BigInt> values;

    std::size_t zero_count() const
    {
        std::size_t z = 0;
        for (const auto& v : values)
            if (modulus ? v % *modulus == 0 : v == 0)
                ++z;
        return z;
    }

    friend bool operator==(const CharColumn&, const CharColumn&) = default;
};

struct ColumnStats {
    std::uint64_t memo_hits = 0;
    std::uint64_t memo_misses = 0;
    std::size_t memo_entries = 0;
};

inline CharColumn compute_column(int n, const Partition& mu, std::optional<int> modulus = std::nullopt,
                                 ColumnStats* stats = nullptr)
{
    if (mu.size() != n)
        throw InvalidInput("class " + mu.str() + " is not a partition of " + std::to_string(n));
    if (modulus)
        require_prime(*modulus);

    CharColumn column{n, mu, modulus, {}};
    column.values.reserve(static_cast<std::size_t>(partition_count(n)));
    auto fill = [&](const auto& arith) {
        MemoCache<typename std::decay_t<decltype(arith)>::value_type> cache;
        for_each_partition(n, [&](std::span<const int> alpha) {
            column.values.emplace_back(detail::mn_evaluate(arith, alpha, mu.parts(), 0, cache, false));
        });
        if (stats) {
            auto s = cache.stats();
            *stats = {s.hits, s.misses, s.entries};
        }
    };
    if (modulus)
        fill(ModularArithmetic{static_cast<std::uint32_t>(*modulus)});
    else
        fill(ExactArithmetic{});
    return column;
}

/// Degree of chi^alpha by the hook-length formula n! / prod(hooks).
inline BigInt dimension(const Partition& alpha)
{
    BigInt denom = 1;
    for (int h : hook_multiset(alpha))
        denom *= h;
    BigInt num = factorial(alpha.size());
    BigInt q = num / denom;
    if (q * denom != num)
        throw std::logic_error("hook product does not divide n! for " + alpha.str());
    return q;
}

} // namespace sncore
