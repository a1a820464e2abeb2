#pragma once

#include <cstdio>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "census.hpp"

namespace sncore::report {

/// 12 significant digits.
inline std::string format_float(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Quotes cells that contain a comma, quote or newline.
inline std::string csv_cell(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

inline std::string csv_row(std::initializer_list<std::string> cells)
{
    std::string out;
    bool first = true;
    for (const auto& cell : cells) {
        if (!first)
            out += ',';
        out += csv_cell(cell);
        first = false;
    }
    return out + '\n';
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline std::string column_record_header()
{
    return "n,p,mu,lambda,lambda_bar,zero_count,total,proportion,proportion_float,qualifies_theorem,witness_i,"
           "witness_s,qualifies_corollary,core_k,core_floor\n";
}

inline std::string column_record_csv(const ColumnDivisibilityRecord& r)
{
    const auto& w = r.theorem_witness;
    return csv_row({std::to_string(r.n), std::to_string(r.p), r.mu.str(), r.lambda.str(), r.lambda_bar.str(),
                    r.zero_count.str(), r.total.str(), to_string(r.proportion), format_float(to_double(r.proportion)),
                    bool_text(r.qualifies_theorem), w ? std::to_string(w->index) : "", w ? std::to_string(w->s) : "",
                    bool_text(r.qualifies_corollary), std::to_string(r.core_k), r.core_floor.str()});
}

inline nlohmann::ordered_json column_record_json(const ColumnDivisibilityRecord& r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["mu"] = r.mu.str();
    j["lambda"] = r.lambda.str();
    j["lambda_bar"] = r.lambda_bar.str();
    j["zero_count"] = r.zero_count.str();
    j["total"] = r.total.str();
    j["proportion"] = to_string(r.proportion);
    j["proportion_float"] = to_double(r.proportion);
    j["qualifies_theorem"] = r.qualifies_theorem;
    if (r.theorem_witness)
        j["witness"] = {{"i", r.theorem_witness->index}, {"s", r.theorem_witness->s}};
    else
        j["witness"] = nullptr;
    j["qualifies_corollary"] = r.qualifies_corollary;
    j["core_k"] = r.core_k;
    j["core_floor"] = r.core_floor.str();
    return j;
}

/// Per-column table, a blank line, then the one-row census summary.
inline std::string census_csv(const CensusResult& result)
{
    const auto& rec = result.record;
    std::string out = "n,p,label,multiplicity,zero_count,total,proportion,proportion_float\n";
    for (const auto& row : result.columns) {
        Rational prop(row.zero_count, row.total == 0 ? BigInt(1) : row.total);
        out += csv_row({std::to_string(rec.n), std::to_string(rec.p), row.label.str(), row.multiplicity.str(),
                        row.zero_count.str(), row.total.str(), to_string(prop), format_float(to_double(prop))});
    }
    out += "\nn,p,divisible_entries,table_size,ratio,ratio_float\n";
    out += csv_row({std::to_string(rec.n), std::to_string(rec.p), rec.divisible_entries.str(), rec.table_size.str(),
                    to_string(rec.ratio), format_float(to_double(rec.ratio))});
    return out;
}

inline nlohmann::ordered_json census_json(const CensusResult& result)
{
    const auto& rec = result.record;
    nlohmann::ordered_json j;
    j["census"] = {{"n", rec.n},
                   {"p", rec.p},
                   {"divisible_entries", rec.divisible_entries.str()},
                   {"table_size", rec.table_size.str()},
                   {"ratio", to_string(rec.ratio)},
                   {"ratio_float", to_double(rec.ratio)}};
    auto columns = nlohmann::ordered_json::array();
    for (const auto& row : result.columns)
        columns.push_back({{"label", row.label.str()},
                           {"multiplicity", row.multiplicity.str()},
                           {"zero_count", row.zero_count.str()},
                           {"total", row.total.str()}});
    j["columns"] = std::move(columns);
    return j;
}

inline std::string fiber_header() { return "n,p,lambda,fiber_size,fiber,congruent,mismatch_mu,mismatch_alpha\n"; }

inline std::string fiber_csv(const FiberCongruenceReport& r)
{
    std::string members;
    for (std::size_t i = 0; i < r.fiber.size(); ++i) {
        if (i)
            members += ' ';
        members += r.fiber[i].str();
    }
    return csv_row({std::to_string(r.n), std::to_string(r.p), r.lambda.str(), std::to_string(r.fiber.size()), members,
                    bool_text(r.holds), r.mismatch ? r.mismatch->mu.str() : "",
                    r.mismatch ? r.mismatch->alpha.str() : ""});
}

inline nlohmann::ordered_json fiber_json(const FiberCongruenceReport& r)
{
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["lambda"] = r.lambda.str();
    auto members = nlohmann::ordered_json::array();
    for (const auto& mu : r.fiber)
        members.push_back(mu.str());
    j["fiber"] = std::move(members);
    j["congruent"] = r.holds;
    if (r.mismatch)
        j["mismatch"] = {{"mu", r.mismatch->mu.str()},
                         {"alpha", r.mismatch->alpha.str()},
                         {"expected", r.mismatch->expected.str()},
                         {"actual", r.mismatch->actual.str()}};
    return j;
}

inline std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

inline std::string bound_header() { return "n,k,m,c,lhs,rhs,holds,slack\n"; }

inline std::string bound_csv(const BoundReport& r)
{
    return csv_row({optional_int(r.n), optional_int(r.k), optional_int(r.m), r.c ? format_float(*r.c) : "",
                    to_string(r.lhs), to_string(r.rhs), bool_text(r.holds),
                    r.slack ? format_float(to_double(*r.slack)) : ""});
}

inline nlohmann::ordered_json bound_json(const BoundReport& r)
{
    nlohmann::ordered_json j;
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v)
            j[key] = *v;
    };
    put("n", r.n);
    put("k", r.k);
    put("m", r.m);
    if (r.c)
        j["c"] = *r.c;
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["comparison"] = r.comparison == Comparison::Equal ? "==" : "<=";
    j["holds"] = r.holds;
    j["slack"] = r.slack ? nlohmann::ordered_json(to_double(*r.slack)) : nlohmann::ordered_json(nullptr);
    return j;
}

inline std::string lemma3_header() { return "n,k,c,qualifies,lhs,rhs,holds,slack,core_ratio,deficit_bound_float\n"; }

inline std::string lemma3_csv(const Lemma3Report& r)
{
    const auto& b = r.bound;
    return csv_row({std::to_string(r.n), std::to_string(r.k), format_float(r.c), bool_text(r.qualifies),
                    b ? to_string(b->lhs) : "", to_string(r.deficit_bound), b ? bool_text(b->holds) : "",
                    b && b->slack ? format_float(to_double(*b->slack)) : "",
                    r.core_ratio ? to_string(*r.core_ratio) : "", format_float(to_double(r.deficit_bound))});
}

inline std::string hr_header() { return "m,p_m,ratio\n"; }

inline std::string hr_csv(const HrBracket& r)
{
    return csv_row({std::to_string(r.m), r.partitions.str(), format_float(r.ratio)});
}

} // namespace sncore::report
