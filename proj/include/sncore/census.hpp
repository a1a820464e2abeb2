#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "characters.hpp"
#include "column_cache.hpp"
#include "cores.hpp"
#include "padic.hpp"
#include "partitions.hpp"
#include "types.hpp"

namespace sncore {

/// Runs task(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any task is rethrown after all workers stop.
template <class Task>
void parallel_for(std::size_t count, int jobs, Task&& task)
{
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; !failed && (i = next++) < count;) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

/// Default constant for the divisibility hypotheses when none is given.
inline constexpr double kDefaultTheoremConstant = 0.4;

struct ColumnDivisibilityRecord {
    int n = 0;
    int p = 2;
    Partition mu;
    /// mu*
    Partition lambda;
    Partition lambda_bar;
    BigInt zero_count;
    BigInt total;
    Rational proportion;
    std::optional<HypothesisWitness> theorem_witness;
    bool qualifies_theorem = false;
    bool qualifies_corollary = false;
    /// c_k(n) with k = lambda_bar_1: the k-cores alpha all give chi^alpha = 0
    /// on any class whose largest cycle is k.
    int core_k = 0;
    BigInt core_floor;
};

/// Divisibility statistics of the mod-p column of mu. Hypothesis predicates
/// are evaluated on mu* and only for n >= 2 (otherwise reported false).
inline ColumnDivisibilityRecord column_divisibility(int n, int p, const Partition& mu,
                                                    double c = kDefaultTheoremConstant,
                                                    ColumnSource* source = nullptr)
{
    require_prime(p);
    if (mu.size() != n)
        throw InvalidInput("class " + mu.str() + " is not a partition of " + std::to_string(n));
    ColumnDivisibilityRecord rec;
    rec.n = n;
    rec.p = p;
    rec.mu = mu;
    rec.lambda = star_map(mu, p);
    rec.lambda_bar = lambda_bar(rec.lambda, p);

    CharColumn column = source ? source->get(n, mu, p) : compute_column(n, mu, p);
    rec.zero_count = column.zero_count();
    rec.total = partition_count(n);
    rec.proportion = Rational(rec.zero_count, rec.total);

    if (n >= 2) {
        TheoremParams params(p, c, n);
        rec.theorem_witness = theorem_hypothesis(rec.lambda, params);
        rec.qualifies_theorem = rec.theorem_witness.has_value();
        rec.qualifies_corollary = corollary_hypothesis(rec.lambda, params);
    }
    rec.core_k = rec.lambda_bar.largest_part();
    rec.core_floor = rec.core_k > 0 ? count_k_cores(n, rec.core_k) : BigInt(0);
    return rec;
}

struct CongruenceMismatch {
    Partition mu;
    Partition alpha;
    BigInt expected;
    BigInt actual;
};

struct FiberCongruenceReport {
    int n = 0;
    int p = 2;
    Partition lambda;
    std::vector<Partition> fiber;
    bool holds = true;
    std::optional<CongruenceMismatch> mismatch;
};

/// Checks that the mod-p columns of every class in K_p(lambda) coincide,
/// reporting the first disagreement against the column of lambda itself.
inline FiberCongruenceReport verify_fiber_congruence(int n, int p, const Partition& lambda,
                                                     ColumnSource* source = nullptr)
{
    if (lambda.size() != n)
        throw InvalidInput("partition " + lambda.str() + " is not a partition of " + std::to_string(n));
    FiberCongruenceReport report{n, p, lambda, enumerate_fiber(lambda, p), true, std::nullopt};
    auto column_of = [&](const Partition& mu) { return source ? source->get(n, mu, p) : compute_column(n, mu, p); };
    const CharColumn reference = column_of(lambda);
    if (report.fiber.size() < 2)
        return report;
    const auto alphas = enumerate_partitions(n);
    for (const auto& mu : report.fiber) {
        if (mu == lambda)
            continue;
        const CharColumn other = column_of(mu);
        for (std::size_t i = 0; i < other.values.size(); ++i) {
            if (other.values[i] != reference.values[i]) {
                report.holds = false;
                report.mismatch = CongruenceMismatch{mu, alphas[i], reference.values[i], other.values[i]};
                return report;
            }
        }
    }
    return report;
}

struct CoreVanishingViolation {
    Partition alpha;
    Partition mu;
    BigInt value;
};

struct CoreVanishingReport {
    int n = 0;
    int k = 1;
    std::size_t cores_checked = 0;
    std::size_t classes_checked = 0;
    std::vector<CoreVanishingViolation> violations;
    bool holds() const noexcept { return violations.empty(); }
};

/// For every k-core alpha of n and every class mu of n with largest part k,
/// checks chi^alpha_mu == 0 exactly.
inline CoreVanishingReport verify_core_vanishing(int n, int k)
{
    if (k < 1 || k > n)
        throw InvalidInput("core vanishing needs 1 <= k <= n");
    CoreVanishingReport report;
    report.n = n;
    report.k = k;
    std::vector<Partition> cores;
    for (auto& alpha : enumerate_partitions(n))
        if (is_k_core(alpha, k))
            cores.push_back(std::move(alpha));
    report.cores_checked = cores.size();
    MemoCache<BigInt> cache;
    for (const auto& mu : enumerate_partitions(n)) {
        if (mu.largest_part() != k)
            continue;
        ++report.classes_checked;
        for (const auto& alpha : cores) {
            BigInt value = mn_character(alpha, mu, &cache);
            if (value != 0)
                report.violations.push_back({alpha, mu, std::move(value)});
        }
    }
    return report;
}

struct CensusRecord {
    int n = 0;
    int p = 2;
    /// E_p(n): entries of the character table of S_n divisible by p.
    BigInt divisible_entries;
    BigInt table_size;
    Rational ratio;
};

/// One computed column in a census: `label` is the class whose column was
/// computed, standing for `multiplicity` classes with identical mod-p columns.
struct CensusColumnRow {
    Partition label;
    BigInt multiplicity;
    BigInt zero_count;
    BigInt total;
};

struct CensusOptions {
    int jobs = 1;
    std::optional<std::filesystem::path> cache_dir;
    /// Compute one column per lambda in Omega_p(n) and weight it by |K_p(lambda)|.
    bool use_fibers = true;
};

struct CensusResult {
    CensusRecord record;
    std::vector<CensusColumnRow> columns;
    std::uint64_t cache_hits = 0;
    std::uint64_t columns_computed = 0;
};

inline CensusResult table_census(int n, int p, const CensusOptions& options = {})
{
    require_prime(p);
    if (n < 0)
        throw InvalidInput("census needs n >= 0");
    std::vector<Partition> labels;
    for (auto& mu : enumerate_partitions(n))
        if (!options.use_fibers || is_in_omega_p(mu, p))
            labels.push_back(std::move(mu));

    ColumnSource source(options.cache_dir);
    std::vector<CensusColumnRow> rows(labels.size());
    parallel_for(labels.size(), options.jobs, [&](std::size_t i) {
        const auto& label = labels[i];
        CharColumn column = source.get(n, label, p);
        rows[i] = CensusColumnRow{label, options.use_fibers ? fiber_size(label, p) : BigInt(1),
                                  column.zero_count(), static_cast<BigInt>(column.values.size())};
    });

    CensusResult result;
    result.record.n = n;
    result.record.p = p;
    const BigInt pn = partition_count(n);
    result.record.table_size = pn * pn;
    for (const auto& row : rows)
        result.record.divisible_entries += row.zero_count * row.multiplicity;
    result.record.ratio = Rational(result.record.divisible_entries, result.record.table_size);
    result.columns = std::move(rows);
    result.cache_hits = source.hits();
    result.columns_computed = source.computed();
    return result;
}

struct TheoremExperiment {
    int n = 0;
    int p = 2;
    double c = kDefaultTheoremConstant;
    /// c^4 ln(n) / n^{c pi / sqrt 6 - 1/2}: the decay term of the asymptotic
    /// lower bound, reported without its unknown constant factor.
    double decay_term = 0;
    std::vector<ColumnDivisibilityRecord> records;
    /// zero_count >= core_floor for every record.
    bool all_hold = true;
};

/// For every lambda in Omega_p(n) meeting the hypothesis, the divisibility
/// record of the column of lambda_bar.
inline TheoremExperiment theorem_experiment(int n, int p, double c, const CensusOptions& options = {})
{
    TheoremParams params(p, c, n);
    if (n < 2)
        throw InvalidInput("theorem experiment needs n >= 2");
    TheoremExperiment out;
    out.n = n;
    out.p = p;
    out.c = c;
    const double nn = n;
    out.decay_term = std::pow(c, 4) * std::log(nn) / std::pow(nn, c * std::numbers::pi / std::sqrt(6.0) - 0.5);

    std::vector<Partition> qualifying;
    for (auto& lambda : enumerate_partitions(n))
        if (is_in_omega_p(lambda, p) && theorem_hypothesis(lambda, params))
            qualifying.push_back(std::move(lambda));

    ColumnSource source(options.cache_dir);
    out.records.resize(qualifying.size());
    parallel_for(qualifying.size(), options.jobs, [&](std::size_t i) {
        out.records[i] = column_divisibility(n, p, lambda_bar(qualifying[i], p), c, &source);
    });
    for (const auto& rec : out.records)
        if (rec.zero_count < rec.core_floor)
            out.all_hold = false;
    return out;
}

} // namespace sncore
