// serialize.hpp
// Run configuration plus CSV/JSON emission for the record types the CLI
// prints. CSV schema for solution records is stable:
//   c,n,pi,ratio,chain_ok
// JSON output uses the same field names, one object per line.

#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pidiv/interval_solver.hpp"
#include "pidiv/sequences.hpp"

namespace pidiv {

enum class OutputFormat { csv, json, table };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown output format \"" + s + "\" (csv|json|table)");
}

struct RunConfig {
    std::string cache_path;            // empty: no persistent cache
    unsigned segment_bits = 22;        // in [16, 30]
    long c_max = 20;                   // default desk-scale ceiling for interval solves
    unsigned precision_cap_bits = 4096;
    OutputFormat output_format = OutputFormat::table;

    void validate() const {
        if (segment_bits < 16 || segment_bits > 30)
            throw std::invalid_argument("segment_bits must lie in [16, 30]");
        if (precision_cap_bits < 128)
            throw std::invalid_argument("precision_cap_bits must be >= 128");
    }

    EngineConfig engine_config() const {
        EngineConfig cfg;
        cfg.segment_bits = segment_bits;
        return cfg;
    }
    PrecisionPolicy precision_policy() const { return PrecisionPolicy{53, precision_cap_bits}; }
};

// -------------------------------------------------------
// Solution records
// -------------------------------------------------------

// The CSV-facing row; chain_ok summarizes the verified equality chain.
struct SolutionRow {
    long c = 0;
    u64 n = 0;
    u64 pi = 0;
    u64 ratio = 0;
    bool chain_ok = false;

    friend bool operator==(const SolutionRow&, const SolutionRow&) = default;
};

inline SolutionRow to_row(const SolutionRecord& rec) {
    return {rec.c, rec.n, rec.pi, rec.ratio, rec.chain.all_equal};
}

inline constexpr const char* kSolutionCsvHeader = "c,n,pi,ratio,chain_ok";

inline void write_solutions_csv(std::ostream& out, const std::vector<SolutionRecord>& recs) {
    out << kSolutionCsvHeader << '\n';
    for (const auto& rec : recs) {
        const SolutionRow row = to_row(rec);
        out << row.c << ',' << row.n << ',' << row.pi << ',' << row.ratio << ','
            << (row.chain_ok ? 1 : 0) << '\n';
    }
}

inline std::vector<SolutionRow> read_solutions_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSolutionCsvHeader)
        throw std::runtime_error("solution CSV: missing or unknown header");
    std::vector<SolutionRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        long c = 0;
        unsigned long long n = 0, pi = 0, ratio = 0;
        int chain = 0;
        if (std::sscanf(line.c_str(), "%ld,%llu,%llu,%llu,%d", &c, &n, &pi, &ratio, &chain) != 5)
            throw std::runtime_error("solution CSV: malformed line " + std::to_string(lineno));
        rows.push_back({c, n, pi, ratio, chain != 0});
    }
    return rows;
}

inline void write_solutions_json(std::ostream& out, const std::vector<SolutionRecord>& recs) {
    for (const auto& rec : recs) {
        nlohmann::json j{{"c", rec.c},
                         {"n", rec.n},
                         {"pi", rec.pi},
                         {"ratio", rec.ratio},
                         {"chain_ok", rec.chain.all_equal}};
        out << j.dump() << '\n';
    }
}

// -------------------------------------------------------
// Sequence terms
// -------------------------------------------------------

inline void write_ratio_csv(std::ostream& out, const std::vector<RatioTerm>& terms) {
    out << "n,ratio,is_integer\n";
    for (const auto& t : terms)
        out << t.n << ',' << t.ratio.get_str() << ',' << (t.is_integer ? 1 : 0) << '\n';
}

inline void write_ratio_json(std::ostream& out, const std::vector<RatioTerm>& terms) {
    for (const auto& t : terms) {
        nlohmann::json j{{"n", t.n}, {"ratio", t.ratio.get_str()}, {"is_integer", t.is_integer}};
        out << j.dump() << '\n';
    }
}

inline void write_sterms_csv(std::ostream& out, const std::vector<STerm>& terms) {
    out << "k,value,witness_n\n";
    for (const auto& t : terms) out << t.k << ',' << t.value << ',' << t.witness_n << '\n';
}

inline void write_sterms_json(std::ostream& out, const std::vector<STerm>& terms) {
    for (const auto& t : terms) {
        nlohmann::json j{{"k", t.k}, {"value", t.value}, {"witness_n", t.witness_n}};
        out << j.dump() << '\n';
    }
}

} // namespace pidiv
