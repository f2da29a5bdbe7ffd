// sequences.hpp
// The ratio sequence R (all values of d(n) = n/pi(n) for n >= 2, as exact
// rationals) and its integer subsequence S, witness search for any target
// integer value of d (it attains every integer >= 2), and the hunt for
// adjacent repeats S_k = S_{k+1}.
//
// Search zones: ratios below 11 can only occur at n <= floor(e^(v+1.1))
// (for n >= 60184 the bracket ln n - 1.1 < n/pi(n) < ln n - 1 pins any
// integer ratio v to ln n in (v+1, v+1.1)); ratios v >= 11 occur only inside
// the candidate interval with c = v + 1, since max n/pi(n) < 11 on
// [2, 60183]. Note the zone boundary does not coincide with 60184: ratio-10
// solutions exist in [60184, floor(e^11.1)], so small-range scans here run
// through floor(e^11.1), not 60183.

#pragma once

#include <vector>

#include "pidiv/interval_solver.hpp"

namespace pidiv {

struct RatioTerm {
    u64 n = 0;
    mpq_class ratio; // n / pi(n), lowest terms
    bool is_integer = false;
};

// Streams RatioTerm for n = 2..n_max off one sweep.
template <class Fn>
inline void ratio_sequence(const PiEngine& engine, u64 n_max, Fn&& fn) {
    if (n_max < 2) throw std::domain_error("ratio_sequence: n_max must be >= 2");
    engine.pi_sweep(2, n_max, PiResult{1, 0, PiMethod::Sieve}, [&](u64 n, u64 pi) {
        RatioTerm term;
        term.n = n;
        term.ratio = mpq_class(static_cast<unsigned long>(n), static_cast<unsigned long>(pi));
        term.ratio.canonicalize();
        term.is_integer = term.ratio.get_den() == 1;
        fn(term);
    });
}

struct STerm {
    u64 k = 0;       // 1-based index in S (witness order)
    u64 value = 0;   // n / pi(n)
    u64 witness_n = 0;
};

// Integer terms of the ratio sequence for n = 2..n_max, in witness order.
inline std::vector<STerm> integer_sequence(const PiEngine& engine, u64 n_max) {
    if (n_max < 2) throw std::domain_error("integer_sequence: n_max must be >= 2");
    std::vector<STerm> terms;
    engine.pi_sweep(2, n_max, PiResult{1, 0, PiMethod::Sieve}, [&](u64 n, u64 pi) {
        if (n % pi == 0)
            terms.push_back({static_cast<u64>(terms.size() + 1), n / pi, n});
    });
    return terms;
}

struct GolombWitness {
    u64 value = 0;
    u64 witness_n = 0;
    u64 pi = 0;
    // true: minimality established by exhaustive scan below the witness;
    // false: minimal within the localized search zones (v >= 14)
    bool minimality_exhaustive = false;
};

// Smallest m with m/pi(m) = v. Existence for every v >= 2 is a theorem
// (Golomb); a scan that comes up empty inside the forced zone throws a
// falsification_error.
inline GolombWitness golomb_witness(const PiEngine& engine, u64 v,
                                    u64 sweep_budget = kDefaultSweepBudget,
                                    PrecisionPolicy policy = {}) {
    if (v < 2) throw std::domain_error("golomb_witness: the ratio attains only values >= 2");
    if (v <= 10) {
        const u64 horizon =
            to_u64_checked(floor_exp_tenths(static_cast<long>(v) + 1, 1, policy),
                           "witness search horizon e^(v+1.1)");
        GolombWitness w{v, 0, 0, true};
        engine.pi_sweep(2, horizon, PiResult{1, 0, PiMethod::Sieve}, [&](u64 n, u64 pi) {
            if (w.witness_n == 0 && pi * v == n) {
                w.witness_n = n;
                w.pi = pi;
            }
        });
        if (w.witness_n == 0)
            throw falsification_error("golomb-witness",
                                      "no m <= " + std::to_string(horizon) +
                                          " with m/pi(m) = " + std::to_string(v));
        return w;
    }
    // v >= 11: the witness lies in the candidate interval with c = v + 1
    const auto records = solve_interval(engine, static_cast<long>(v) + 1, sweep_budget, policy);
    GolombWitness w{v, records.front().n, records.front().pi, false};
    if (v <= 13) {
        // exhaustive confirmation that nothing smaller above the small range
        // produces ratio v (the small range is covered by max n/pi(n) < 11)
        engine.pi_sweep(kPredicateThreshold, w.witness_n - 1,
                        engine.pi_exact(kPredicateThreshold - 1), [&](u64 n, u64 pi) {
                            if (pi * v == n)
                                throw falsification_error(
                                    "witness-localization",
                                    "ratio " + std::to_string(v) + " attained at n = " +
                                        std::to_string(n) + " outside the candidate interval");
                        });
        w.minimality_exhaustive = true;
    }
    return w;
}

struct RepeatEntry {
    u64 k = 0;          // S_k = S_{k+1}
    u64 value = 0;
    u64 witness_k = 0;
    u64 witness_k1 = 0;
};

struct RepeatReport {
    std::vector<STerm> terms;          // S up to the horizon
    std::vector<RepeatEntry> repeats;  // adjacent equal pairs
    long c_max = 0;
    u64 horizon = 0;                   // floor(e^(c_max+0.1))
};

// Every adjacent equal pair in S up to the horizon floor(e^(c_max+0.1)).
// S is assembled from one blind sweep through floor(e^11.1) plus the solved
// candidate intervals c = 12..c_max; the gap zones in between carry no
// solutions (verified separately by verify_gap_zone).
inline RepeatReport find_repeats(const PiEngine& engine, long c_max,
                                 u64 sweep_budget = kDefaultSweepBudget,
                                 PrecisionPolicy policy = {}) {
    if (c_max < kMinIntervalExponent)
        throw std::domain_error("find_repeats: c_max must be >= 12");
    RepeatReport rep;
    rep.c_max = c_max;
    rep.horizon = to_u64_checked(floor_exp_tenths(c_max, 1, policy), "repeat horizon");
    const u64 small_hi = to_u64_checked(floor_exp_tenths(11, 1, policy), "e^11.1");
    engine.pi_sweep(2, small_hi, PiResult{1, 0, PiMethod::Sieve}, [&](u64 n, u64 pi) {
        if (n % pi == 0)
            rep.terms.push_back({static_cast<u64>(rep.terms.size() + 1), n / pi, n});
    });
    for (long c = kMinIntervalExponent; c <= c_max; ++c)
        for (const auto& rec : solve_interval(engine, c, sweep_budget, policy))
            rep.terms.push_back({static_cast<u64>(rep.terms.size() + 1), rec.ratio, rec.n});
    for (std::size_t i = 0; i + 1 < rep.terms.size(); ++i)
        if (rep.terms[i].value == rep.terms[i + 1].value)
            rep.repeats.push_back({rep.terms[i].k, rep.terms[i].value, rep.terms[i].witness_n,
                                   rep.terms[i + 1].witness_n});
    return rep;
}

} // namespace pidiv
