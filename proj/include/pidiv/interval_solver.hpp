// interval_solver.hpp
// For n >= 60184, pi(n) | n forces n to be a multiple of D = floor(ln n - 1)
// lying in the candidate interval [e^(D+1), e^(D+1.1)], and for every fixed
// c >= 12 the interval [e^c, e^(c+0.1)] contains at least one such n with
// pi(n) = n/(c-1). This module computes certified integer endpoints of those
// intervals, searches them exhaustively, verifies the complementary gap
// zones [e^(a+0.1), e^(a+1)] where pi(n) | n is impossible for a >= 11,
// and checks the two small-scale facts: the floor(e^a) ratio table and
// max n/pi(n) < 11 on [2, 60183].

#pragma once

#include <string>
#include <vector>

#include "pidiv/certified.hpp"
#include "pidiv/errors.hpp"
#include "pidiv/pi_engine.hpp"
#include "pidiv/predicates.hpp"

namespace pidiv {

inline constexpr long kMinIntervalExponent = 12; // interval existence needs c >= 12
inline constexpr long kMinGapZoneExponent = 11;  // gap zones need a >= 11

struct IntervalSpec {
    long c = 0;
    u64 lo = 0;           // ceil(e^c), certified
    u64 hi = 0;           // floor(e^(c+0.1)), certified
    u64 expected_ratio = 0; // c - 1
};

// Certified integer endpoints [ceil(e^c), floor(e^(c+0.1))].
inline IntervalSpec interval_endpoints(long c, PrecisionPolicy policy = {}) {
    if (c < kMinIntervalExponent)
        throw std::domain_error("interval_endpoints: solutions are guaranteed only for c >= 12, got " +
                                std::to_string(c));
    IntervalSpec spec;
    spec.c = c;
    spec.lo = to_u64_checked(ceil_exp_tenths(c, 0, policy), "interval endpoint e^c");
    spec.hi = to_u64_checked(floor_exp_tenths(c, 1, policy), "interval endpoint e^(c+0.1)");
    spec.expected_ratio = static_cast<u64>(c - 1);
    return spec;
}

struct SolutionRecord {
    long c = 0;
    u64 n = 0;
    u64 pi = 0;
    u64 ratio = 0;
    EqualityChain chain;
};

inline constexpr u64 kDefaultSweepBudget = 1'000'000'000;

// All n in [ceil(e^c), floor(e^(c+0.1))] with pi(n) * (c-1) = n, found by
// anchoring pi at lo-1 and one sweep over the interval, testing only
// multiples of c-1. Every hit is re-verified with an independent point query
// and carries a verified equality chain. An empty result would contradict
// the interval existence theorem and throws a falsification_error.
inline std::vector<SolutionRecord> solve_interval(const PiEngine& engine, long c,
                                                  u64 sweep_budget = kDefaultSweepBudget,
                                                  PrecisionPolicy policy = {}) {
    const IntervalSpec spec = interval_endpoints(c, policy);
    if (spec.hi - spec.lo + 1 > sweep_budget)
        throw resource_error("solve_interval: interval for c = " + std::to_string(c) + " spans " +
                             std::to_string(spec.hi - spec.lo + 1) +
                             " integers, over the sweep budget; raise the budget or reuse "
                             "checkpoints to split the range");
    const u64 d = spec.expected_ratio;
    std::vector<SolutionRecord> out;
    const PiResult anchor = engine.pi_exact(spec.lo - 1);
    engine.pi_sweep(spec.lo, spec.hi, anchor, [&](u64 n, u64 pi) {
        if (n % d == 0 && pi * d == n) out.push_back({c, n, pi, d, {}});
    });
    for (auto& rec : out) {
        const PiResult point = engine.pi_exact(rec.n);
        if (point.pi != rec.pi)
            throw std::logic_error("pi mismatch between sweep and point query at n = " +
                                   std::to_string(rec.n));
        rec.chain = equality_chain(rec.n, rec.pi, policy);
    }
    if (out.empty())
        throw falsification_error("interval-existence",
                                  "no n with pi(n) = n/(c-1) in [" + std::to_string(spec.lo) +
                                      ", " + std::to_string(spec.hi) +
                                      "] for c = " + std::to_string(c));
    return out;
}

// -------------------------------------------------------
// Gap zones
// -------------------------------------------------------
struct GapZoneReport {
    long a = 0;
    u64 zone_lo = 0;   // floor(e^(a+0.1)); checked range starts one above
    u64 zone_hi = 0;   // ceil(e^(a+1));   checked range ends one below
    bool exhaustive = false;
    u64 checked = 0;   // integers whose divisibility was actually tested
};

inline constexpr u64 kDefaultGapZoneBudget = 50'000'000;

// Confirms pi(n) does not divide n across the open zone
// (floor(e^(a+0.1)), ceil(e^(a+1))). Exhaustive when the zone has at most
// `budget` integers; otherwise a deterministic stratified sample (first 10^4,
// last 10^4, 10^5 evenly spaced interior points) plus every multiple of the
// only plausible ratio a-1. A counterexample throws falsification_error.
inline GapZoneReport verify_gap_zone(const PiEngine& engine, long a,
                                     u64 budget = kDefaultGapZoneBudget,
                                     PrecisionPolicy policy = {}) {
    if (a < kMinGapZoneExponent)
        throw std::domain_error("verify_gap_zone: zones exist only for a >= 11, got " +
                                std::to_string(a));
    GapZoneReport rep;
    rep.a = a;
    rep.zone_lo = to_u64_checked(floor_exp_tenths(a, 1, policy), "gap zone endpoint e^(a+0.1)");
    rep.zone_hi = to_u64_checked(ceil_exp_tenths(a + 1, 0, policy), "gap zone endpoint e^(a+1)");
    const u64 first = rep.zone_lo + 1;
    const u64 last = rep.zone_hi - 1;
    const u64 count = last - first + 1;
    rep.exhaustive = count <= budget;

    const u64 ratio = static_cast<u64>(a - 1);
    const auto fail = [&](u64 n, u64 pi) {
        throw falsification_error("gap-zone", "pi(n) | n inside gap zone a = " +
                                                  std::to_string(a) + ": n = " + std::to_string(n) +
                                                  ", pi = " + std::to_string(pi));
    };

    const PiResult anchor = engine.pi_exact(first - 1);
    if (rep.exhaustive) {
        engine.pi_sweep(first, last, anchor, [&](u64 n, u64 pi) {
            if (n % pi == 0) fail(n, pi);
            ++rep.checked;
        });
        return rep;
    }

    // deterministic stratified sample, swept in one ordered pass
    const u64 head_end = first + 10'000 - 1;
    const u64 tail_start = last - 10'000 + 1;
    const u64 stride = count / 100'000;
    u64 next_interior = first + stride;
    u64 next_multiple = ((first + ratio - 1) / ratio) * ratio;
    engine.pi_sweep(first, last, anchor, [&](u64 n, u64 pi) {
        bool check = (n <= head_end || n >= tail_start);
        if (n == next_interior) {
            check = true;
            next_interior += stride;
        }
        if (n == next_multiple) {
            check = true;
            next_multiple += ratio;
        }
        if (check) {
            if (n % pi == 0) fail(n, pi);
            ++rep.checked;
        }
    });
    return rep;
}

// -------------------------------------------------------
// floor(e^a) ratio table
// -------------------------------------------------------
struct CorollaryRow {
    long a = 0;
    u64 floor_exp_a = 0;
    u64 pi = 0;
    mpq_class ratio;     // exact, lowest terms
    bool is_integer = false;
    std::string display; // paper-style: exact when terminating in <= 2 decimals,
                         // else two truncated decimals and "..."
};

namespace detail {

inline std::string corollary_display(const mpq_class& ratio) {
    const mpz_class& num = ratio.get_num();
    const mpz_class& den = ratio.get_den();
    if (den == 1) return num.get_str();
    const mpz_class ipart = num / den;
    const mpz_class hundredths = (100 * num) / den - 100 * ipart; // truncated
    const long h = hundredths.get_si();
    if (mpz_divisible_p(mpz_class(100).get_mpz_t(), den.get_mpz_t())) {
        // terminates within two decimals; print them exactly
        std::string s = ipart.get_str() + ".";
        if (h % 10 == 0) s += std::to_string(h / 10);
        else s += (h < 10 ? "0" : "") + std::to_string(h);
        return s;
    }
    return ipart.get_str() + "." + (h < 10 ? "0" : "") + std::to_string(h) + "...";
}

} // namespace detail

// Rows (a, floor(e^a), pi, ratio) for a = 1..a_max. The ratio must be an
// integer only at a = 1; any other integer row is a falsification event.
inline std::vector<CorollaryRow> corollary_table(const PiEngine& engine, long a_max,
                                                 PrecisionPolicy policy = {}) {
    if (a_max < 1) throw std::domain_error("corollary_table: a_max must be >= 1");
    std::vector<CorollaryRow> rows;
    for (long a = 1; a <= a_max; ++a) {
        CorollaryRow row;
        row.a = a;
        row.floor_exp_a = to_u64_checked(floor_exp_tenths(a, 0, policy), "floor(e^a)");
        row.pi = engine.pi_exact(row.floor_exp_a).pi;
        row.ratio = mpq_class(static_cast<unsigned long>(row.floor_exp_a),
                              static_cast<unsigned long>(row.pi));
        row.ratio.canonicalize();
        row.is_integer = row.ratio.get_den() == 1;
        row.display = detail::corollary_display(row.ratio);
        if (row.is_integer && a != 1)
            throw falsification_error("floor-exp-table",
                                      "ratio is an integer at a = " + std::to_string(a));
        rows.push_back(std::move(row));
    }
    return rows;
}

// -------------------------------------------------------
// Small-range ratio bound
// -------------------------------------------------------
struct SmallRatioScan {
    mpq_class max_ratio;
    u64 argmax_n = 0;
    u64 argmax_pi = 0;
    u64 checked = 0;
};

// Exhaustive max of n/pi(n) over 2 <= n <= 60183, as an exact rational.
// The bound max < 11 underpins witness localization; its failure would be a
// falsification event.
inline SmallRatioScan verify_small_ratio_bound(const PiEngine& engine) {
    SmallRatioScan scan;
    u64 best_n = 2, best_pi = 1;
    engine.pi_sweep(2, kPredicateThreshold - 1, PiResult{1, 0, PiMethod::Sieve},
                    [&](u64 n, u64 pi) {
                        // n/pi > best_n/best_pi by cross-multiplication (exact in u64)
                        if (n * best_pi > best_n * pi) {
                            best_n = n;
                            best_pi = pi;
                        }
                        ++scan.checked;
                    });
    scan.argmax_n = best_n;
    scan.argmax_pi = best_pi;
    scan.max_ratio = mpq_class(static_cast<unsigned long>(best_n),
                               static_cast<unsigned long>(best_pi));
    scan.max_ratio.canonicalize();
    if (scan.max_ratio >= 11)
        throw falsification_error("small-ratio-bound",
                                  "max n/pi(n) on [2, 60183] reached " +
                                      scan.max_ratio.get_str() + " at n = " +
                                      std::to_string(best_n));
    return scan;
}

} // namespace pidiv
