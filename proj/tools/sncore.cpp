// sncore: command-line front end for the core-partition and character-table
// experiments. Exit status: 0 when every check passes, 1 when a check fails,
// 2 on invalid input.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include <sncore/report.hpp>
#include <sncore/sncore.hpp>

using namespace sncore;
using nlohmann::ordered_json;

namespace {

enum class Format { Csv, Json };

struct GlobalOptions {
    Format format = Format::Csv;
    int jobs = 1;
    std::string cache_dir;
    std::uint64_t seed = 1;

    std::optional<std::filesystem::path> cache() const
    {
        if (cache_dir.empty())
            return std::nullopt;
        return std::filesystem::path(cache_dir);
    }
    CensusOptions census() const
    {
        CensusOptions o;
        o.jobs = jobs;
        o.cache_dir = cache();
        return o;
    }
};

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int run_column(const GlobalOptions& g, int n, int p, const std::string& mu_text, bool exact, double c)
{
    Partition mu = Partition::parse(mu_text);
    ColumnSource source(g.cache());
    auto rec = column_divisibility(n, p, mu, c, &source);
    std::optional<CharColumn> exact_column;
    if (exact)
        exact_column = source.get(n, mu, std::nullopt);
    const auto alphas = enumerate_partitions(n);

    if (g.format == Format::Json) {
        auto j = report::column_record_json(rec);
        if (exact_column) {
            auto values = ordered_json::array();
            for (std::size_t i = 0; i < alphas.size(); ++i)
                values.push_back({{"alpha", alphas[i].str()}, {"value", exact_column->values[i].str()}});
            j["values"] = std::move(values);
        }
        print_json(j);
    } else {
        std::cout << report::column_record_header() << report::column_record_csv(rec);
        if (exact_column) {
            std::cout << "\nalpha,value,residue\n";
            for (std::size_t i = 0; i < alphas.size(); ++i) {
                const BigInt& v = exact_column->values[i];
                std::cout << report::csv_row({alphas[i].str(), v.str(), BigInt(((v % p) + p) % p).str()});
            }
        }
    }
    return 0;
}

int run_census(const GlobalOptions& g, int n, int p, bool no_fibers)
{
    auto opts = g.census();
    opts.use_fibers = !no_fibers;
    auto result = table_census(n, p, opts);
    if (g.format == Format::Json)
        print_json(report::census_json(result));
    else
        std::cout << report::census_csv(result);
    std::cerr << "columns computed: " << result.columns_computed << ", read from cache: " << result.cache_hits
              << '\n';
    return 0;
}

int run_fibers(const GlobalOptions& g, int n, int p, const std::string& lambda_text)
{
    std::vector<Partition> labels;
    if (!lambda_text.empty()) {
        labels.push_back(Partition::parse(lambda_text));
    } else {
        for (auto& lambda : enumerate_partitions(n))
            if (is_in_omega_p(lambda, p))
                labels.push_back(std::move(lambda));
    }
    ColumnSource source(g.cache());
    std::vector<FiberCongruenceReport> reports(labels.size());
    parallel_for(labels.size(), g.jobs,
                 [&](std::size_t i) { reports[i] = verify_fiber_congruence(n, p, labels[i], &source); });
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
    if (g.format == Format::Json) {
        auto arr = ordered_json::array();
        for (const auto& r : reports)
            arr.push_back(report::fiber_json(r));
        print_json({{"fibers", arr}, {"all_congruent", ok}});
    } else {
        std::cout << report::fiber_header();
        for (const auto& r : reports)
            std::cout << report::fiber_csv(r);
    }
    return ok ? 0 : 1;
}

int run_theorem_predicates(const GlobalOptions& g, int n, int p, double c, const Partition& lambda)
{
    if (n == 0)
        n = lambda.size();
    TheoremParams params(p, c, n);
    auto witness = theorem_hypothesis(lambda, params);
    const bool corollary = corollary_hypothesis(lambda, params);
    const auto bar = lambda_bar(lambda, p);
    if (g.format == Format::Json) {
        ordered_json j{{"n", n},
                       {"p", p},
                       {"c", c},
                       {"lambda", lambda.str()},
                       {"lambda_bar", bar.str()},
                       {"threshold", params.threshold()},
                       {"theorem_hypothesis", witness.has_value()}};
        j["witness"] = witness ? ordered_json{{"i", witness->index}, {"s", witness->s}} : ordered_json(nullptr);
        j["corollary_hypothesis"] = corollary;
        print_json(j);
    } else {
        std::cout << "n,p,c,lambda,lambda_bar,threshold,theorem_hypothesis,witness_i,witness_s,corollary_hypothesis\n";
        std::cout << report::csv_row({std::to_string(n), std::to_string(p), report::format_float(c), lambda.str(),
                                      bar.str(), report::format_float(params.threshold()),
                                      report::bool_text(witness.has_value()),
                                      witness ? std::to_string(witness->index) : "",
                                      witness ? std::to_string(witness->s) : "", report::bool_text(corollary)});
    }
    return 0;
}

int run_theorem_experiment(const GlobalOptions& g, int n, int p, double c)
{
    auto exp = theorem_experiment(n, p, c, g.census());
    if (g.format == Format::Json) {
        auto arr = ordered_json::array();
        for (const auto& r : exp.records)
            arr.push_back(report::column_record_json(r));
        print_json({{"n", n},
                    {"p", p},
                    {"c", c},
                    {"decay_term", exp.decay_term},
                    {"all_hold", exp.all_hold},
                    {"records", arr}});
    } else {
        std::cout << report::column_record_header();
        for (const auto& r : exp.records)
            std::cout << report::column_record_csv(r);
    }
    std::cerr << "qualifying columns: " << exp.records.size() << ", decay term (without constant): "
              << report::format_float(exp.decay_term) << '\n';
    return exp.all_hold ? 0 : 1;
}

struct BoundsArgs {
    std::string lemma = "1";
    int max_n = 20;
    int max_k = 0;
    int max_m = 20;
    double c = kDefaultTheoremConstant;
};

int run_verify_bounds(const GlobalOptions& g, const BoundsArgs& a)
{
    bool ok = true;
    auto arr = ordered_json::array();
    const bool json = g.format == Format::Json;
    auto emit = [&](const BoundReport& r) {
        ok = ok && r.holds;
        if (json)
            arr.push_back(report::bound_json(r));
        else
            std::cout << report::bound_csv(r);
    };
    const int max_k = a.max_k > 0 ? a.max_k : std::max(a.max_n, 10);

    if (a.lemma == "1") {
        if (!json)
            std::cout << report::bound_header();
        for (int k = 1; k <= (a.max_k > 0 ? a.max_k : 10); ++k)
            for (int m = 1; m <= a.max_m; ++m)
                emit(check_lemma1(k, m));
    } else if (a.lemma == "2" || a.lemma == "fiber") {
        if (!json)
            std::cout << report::bound_header();
        for (int n = 1; n <= a.max_n; ++n)
            for (int k = 1; k <= std::min(n, max_k); ++k)
                emit(a.lemma == "2" ? check_lemma2(n, k) : check_fiber_identity(n, k));
    } else if (a.lemma == "3") {
        if (!json)
            std::cout << report::lemma3_header();
        for (int n = 2; n <= a.max_n; ++n) {
            for (int k = 1; k <= std::min(n, max_k); ++k) {
                auto r = lemma3_report(n, k, a.c);
                if (r.bound)
                    ok = ok && r.bound->holds;
                if (json) {
                    ordered_json j{{"n", n},
                                   {"k", k},
                                   {"c", a.c},
                                   {"qualifies", r.qualifies},
                                   {"deficit_bound", to_string(r.deficit_bound)}};
                    j["bound"] = r.bound ? report::bound_json(*r.bound) : ordered_json(nullptr);
                    j["core_ratio"] = r.core_ratio ? ordered_json(to_string(*r.core_ratio)) : ordered_json(nullptr);
                    arr.push_back(std::move(j));
                } else {
                    std::cout << report::lemma3_csv(r);
                }
            }
        }
    } else if (a.lemma == "hr") {
        if (!json)
            std::cout << report::hr_header();
        for (int m = 1; m <= a.max_m; ++m) {
            auto r = hr_bracket_report(m);
            if (json)
                arr.push_back({{"m", m}, {"p_m", r.partitions.str()}, {"ratio", r.ratio}});
            else
                std::cout << report::hr_csv(r);
        }
    } else {
        throw InvalidInput("unknown lemma '" + a.lemma + "'");
    }
    if (json)
        print_json({{"lemma", a.lemma}, {"all_hold", ok}, {"rows", arr}});
    return ok ? 0 : 1;
}

int run_core_vanish(const GlobalOptions& g, int max_n)
{
    bool ok = true;
    auto arr = ordered_json::array();
    if (g.format == Format::Csv)
        std::cout << "n,k,cores,classes,violations\n";
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto r = verify_core_vanishing(n, k);
            ok = ok && r.holds();
            if (g.format == Format::Json)
                arr.push_back({{"n", n},
                               {"k", k},
                               {"cores", r.cores_checked},
                               {"classes", r.classes_checked},
                               {"violations", r.violations.size()}});
            else
                std::cout << n << ',' << k << ',' << r.cores_checked << ',' << r.classes_checked << ','
                          << r.violations.size() << '\n';
        }
    }
    if (g.format == Format::Json)
        print_json({{"all_hold", ok}, {"rows", arr}});
    return ok ? 0 : 1;
}

/// Strips k-rim hooks in random order and compares with the abacus core.
int run_core_order(const GlobalOptions& g, int max_n, int trials)
{
    std::mt19937_64 rng(g.seed);
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (int k = 1; k <= std::max(n, 1); ++k) {
                const auto expected = k_core(lambda, k).core;
                for (int t = 0; t < trials; ++t) {
                    Partition current = lambda;
                    while (true) {
                        auto options = remove_rim_hook(current, k);
                        if (options.empty())
                            break;
                        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
                        current = options[pick(rng)].remaining;
                    }
                    ++checked;
                    if (current != expected) {
                        ++mismatches;
                        std::cerr << "mismatch: " << lambda.str() << " k=" << k << " greedy=" << current.str()
                                  << " abacus=" << expected.str() << '\n';
                    }
                }
            }
        }
    }
    if (g.format == Format::Json)
        print_json({{"max_n", max_n}, {"trials", trials}, {"seed", g.seed}, {"checked", checked},
                    {"mismatches", mismatches}});
    else
        std::cout << "max_n,trials,seed,checked,mismatches\n"
                  << max_n << ',' << trials << ',' << g.seed << ',' << checked << ',' << mismatches << '\n';
    return mismatches == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Core partitions, Murnaghan-Nakayama characters and p-divisibility census"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string format = "csv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir, "Column cache directory");
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    int n = 0;
    int p = 2;
    double c = kDefaultTheoremConstant;

    auto* column = app.add_subcommand("column", "Divisibility record of one mod-p column");
    std::string mu_text;
    bool exact = false;
    column->add_option("--n", n, "Size")->required();
    column->add_option("--p", p, "Prime")->required();
    column->add_option("--mu", mu_text, "Class, e.g. \"4,1\"")->required();
    column->add_flag("--exact", exact, "Also print the exact character values");
    column->add_option("--c", c, "Constant for the hypothesis predicates");

    auto* census = app.add_subcommand("census", "Count entries divisible by p in the whole character table");
    bool no_fibers = false;
    census->add_option("--n", n, "Size")->required();
    census->add_option("--p", p, "Prime")->required();
    census->add_flag("--no-fibers", no_fibers, "Compute every column instead of one per fiber");

    auto* fibers = app.add_subcommand("fibers", "List fibers K_p(lambda) and verify their columns agree mod p");
    std::string lambda_text;
    fibers->add_option("--n", n, "Size")->required();
    fibers->add_option("--p", p, "Prime")->required();
    fibers->add_option("--lambda", lambda_text, "Single partition with no part divisible by p");

    auto* theorem = app.add_subcommand("theorem-check", "Hypothesis predicates or the qualifying-column experiment");
    std::string theorem_lambda;
    theorem->add_option("--n", n, "Size");
    theorem->add_option("--p", p, "Prime")->required();
    theorem->add_option("--c", c, "Constant c > sqrt(3/2)/pi")->required();
    theorem->add_option("--lambda", theorem_lambda, "Evaluate the predicates on this partition only");

    auto* bounds = app.add_subcommand("verify-bounds", "Exact checks of the core-count bounds");
    BoundsArgs b;
    bounds->add_option("--lemma", b.lemma, "Which bound")->check(CLI::IsMember({"1", "2", "3", "fiber", "hr"}));
    bounds->add_option("--max-n", b.max_n, "Largest n");
    bounds->add_option("--max-k", b.max_k, "Largest k");
    bounds->add_option("--max-m", b.max_m, "Largest m");
    bounds->add_option("--c", b.c, "Constant for the qualifying flag");

    auto* vanish = app.add_subcommand("verify-core-vanish", "k-cores vanish on classes with largest cycle k");
    int max_n = 10;
    vanish->add_option("--max-n", max_n, "Largest n");

    auto* order = app.add_subcommand("verify-core-order", "Random k-hook stripping agrees with the abacus core");
    int trials = 20;
    order->add_option("--max-n", max_n, "Largest n");
    order->add_option("--trials", trials, "Random orders per partition and k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.format = format == "json" ? Format::Json : Format::Csv;

    try {
        if (*column)
            return run_column(g, n, p, mu_text, exact, c);
        if (*census)
            return run_census(g, n, p, no_fibers);
        if (*fibers)
            return run_fibers(g, n, p, lambda_text);
        if (*theorem) {
            if (!theorem_lambda.empty())
                return run_theorem_predicates(g, n, p, c, Partition::parse(theorem_lambda));
            if (n == 0)
                throw InvalidInput("theorem-check needs --n or --lambda");
            return run_theorem_experiment(g, n, p, c);
        }
        if (*bounds)
            return run_verify_bounds(g, b);
        if (*vanish)
            return run_core_vanish(g, max_n);
        if (*order)
            return run_core_order(g, max_n, trials);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
