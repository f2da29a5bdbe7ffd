// pi_engine.hpp
// Exact prime counting: hybrid of segmented sieving (small n and sweeps) and
// a sublinear O(n^{3/4}) counter over the distinct values of floor(n/k)
// (large point queries), with a persistent checkpoint cache.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pidiv/errors.hpp"
#include "pidiv/sieve.hpp"

namespace pidiv {

enum class PiMethod { Sieve, Sublinear, Checkpoint };

inline const char* to_string(PiMethod m) {
    switch (m) {
        case PiMethod::Sieve: return "sieve";
        case PiMethod::Sublinear: return "sublinear";
        case PiMethod::Checkpoint: return "checkpoint";
    }
    return "?";
}

struct PiResult {
    u64 n = 0;
    u64 pi = 0;
    PiMethod method = PiMethod::Sieve;
};

// -------------------------------------------------------
// Sublinear counter. Classic dynamic recurrence over the set of distinct
// quotients floor(n/k): small[v] and large[k] both start as "count of
// integers in [2, v]" and end as pi(v) after striking every prime <= sqrt(n).
// -------------------------------------------------------
inline u64 pi_sublinear(u64 n, u64 max_bytes = kDefaultBitsetBudgetBytes) {
    if (n < 2) return 0;
    const u64 r = isqrt_u64(n);
    if (16 * (r + 1) > max_bytes)
        throw resource_error("pi_sublinear: quotient tables for n = " + std::to_string(n) +
                             " exceed the memory budget");
    std::vector<u64> small(r + 1), large(r + 1);
    for (u64 v = 1; v <= r; ++v) small[v] = v - 1;
    for (u64 k = 1; k <= r; ++k) large[k] = n / k - 1;
    for (u64 p = 2; p <= r; ++p) {
        if (small[p] == small[p - 1]) continue; // p composite
        const u64 sp = small[p - 1];            // pi(p - 1)
        const u64 p2 = p * p;
        const u64 kmax = std::min(r, n / p2);
        for (u64 k = 1; k <= kmax; ++k) {
            const u64 d = k * p;
            large[k] -= (d <= r ? large[d] : small[n / d]) - sp;
        }
        for (u64 v = r; v >= p2; --v) small[v] -= small[v / p] - sp;
    }
    return large[1];
}

// -------------------------------------------------------
// Checkpoints: (n, pi(n)) anchors, persisted as diff-able plain text.
// -------------------------------------------------------
inline constexpr const char* kCheckpointFormatVersion = "pidiv-checkpoints-v1";

struct PiCheckpoint {
    std::vector<std::pair<u64, u64>> anchors; // ascending in n
    std::string source_version = kCheckpointFormatVersion;

    // Structural invariants: strictly increasing n, nondecreasing pi,
    // pi <= n, pi = 0 only below 2, and the step bound
    // pi(b) - pi(a) <= b - a. Throws integrity_error on violation.
    void validate() const {
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            const auto [n, pi] = anchors[i];
            if (n == 0) throw integrity_error("checkpoint: anchor with n = 0");
            if (pi > n) throw integrity_error("checkpoint: pi > n at n = " + std::to_string(n));
            if (n >= 2 && pi == 0)
                throw integrity_error("checkpoint: pi = 0 at n = " + std::to_string(n) + " >= 2");
            if (i > 0) {
                const auto [pn, ppi] = anchors[i - 1];
                if (n <= pn)
                    throw integrity_error("checkpoint: n not strictly increasing at n = " +
                                          std::to_string(n));
                if (pi < ppi)
                    throw integrity_error("checkpoint: pi decreasing at n = " + std::to_string(n));
                if (pi - ppi > n - pn)
                    throw integrity_error("checkpoint: step bound violated between n = " +
                                          std::to_string(pn) + " and n = " + std::to_string(n));
            }
        }
    }
};

inline void save_checkpoints(const std::string& path, const PiCheckpoint& cp) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open checkpoint file for writing: " + path);
    out << kCheckpointFormatVersion << '\n';
    for (const auto& [n, pi] : cp.anchors) out << n << ',' << pi << '\n';
    if (!out) throw std::runtime_error("write failure on checkpoint file: " + path);
}

inline PiCheckpoint load_checkpoints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open checkpoint file: " + path);
    PiCheckpoint cp;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) {
        cp.source_version.clear(); // empty file: empty anchor list
        return cp;
    }
    ++lineno;
    if (line != kCheckpointFormatVersion)
        throw std::runtime_error(path + ":1: unknown checkpoint format \"" + line + "\"");
    cp.source_version = line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        u64 n = 0, pi = 0;
        try {
            std::size_t used = 0;
            if (comma == std::string::npos) throw std::invalid_argument("no comma");
            n = std::stoull(line.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("trailing junk");
            pi = std::stoull(line.substr(comma + 1), &used);
            if (used != line.size() - comma - 1) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed checkpoint line \"" + line + "\"");
        }
        cp.anchors.emplace_back(n, pi);
    }
    cp.validate();
    return cp;
}

// -------------------------------------------------------
// PiEngine
// -------------------------------------------------------
struct EngineConfig {
    u64 sieve_threshold = 100'000'000; // point queries below: sieve; at/above: sublinear
    u64 cache_min_n = 1'000'000;       // results at/above are kept as anchors
    unsigned segment_bits = 22;        // log2 of odd entries per sieve segment
    u64 max_bytes = kDefaultBitsetBudgetBytes;

    u64 segment_odd_entries() const { return 1ull << segment_bits; }
};

// State of an in-progress sweep, reported at each segment boundary.
// running_pi is anchored at segment_lo - 1.
struct SweepCursor {
    u64 segment_lo = 0;
    u64 segment_hi = 0;
    u64 running_pi = 0;
};

class PiEngine {
public:
    explicit PiEngine(EngineConfig cfg = {}) : cfg_(cfg) {}

    const EngineConfig& config() const { return cfg_; }

    // Exact pi(n). Thread-safe; results at or above cache_min_n become anchors.
    PiResult pi_exact(u64 n) const {
        check_capacity(n);
        if (n == 0) throw std::domain_error("pi_exact: n must be a positive integer");
        if (n < 2) return {n, 0, PiMethod::Sieve};
        {
            std::shared_lock lock(mu_);
            auto it = cache_.find(n);
            if (it != cache_.end()) return {n, it->second, PiMethod::Checkpoint};
        }
        PiResult res;
        if (n < cfg_.sieve_threshold) {
            u64 base_n = 1, base_pi = 0;
            {
                std::shared_lock lock(mu_);
                auto it = cache_.upper_bound(n);
                if (it != cache_.begin()) {
                    --it;
                    base_n = it->first;
                    base_pi = it->second;
                }
            }
            res = {n, base_pi + count_primes_range(base_n + 1, n, cfg_.segment_odd_entries()),
                   PiMethod::Sieve};
        } else {
            res = {n, pi_sublinear(n, cfg_.max_bytes), PiMethod::Sublinear};
        }
        if (n >= cfg_.cache_min_n) {
            std::unique_lock lock(mu_);
            cache_.emplace(n, res.pi);
        }
        return res;
    }

    // Single-method variants for cross-validation; neither reads nor writes
    // the cache.
    PiResult pi_sieve_only(u64 n) const {
        check_capacity(n);
        if (n == 0) throw std::domain_error("pi_sieve_only: n must be a positive integer");
        return {n, count_primes_range(2, n, cfg_.segment_odd_entries()), PiMethod::Sieve};
    }
    PiResult pi_sublinear_only(u64 n) const {
        check_capacity(n);
        if (n == 0) throw std::domain_error("pi_sublinear_only: n must be a positive integer");
        return {n, pi_sublinear(n, cfg_.max_bytes), PiMethod::Sublinear};
    }

    // Streams (n, pi(n)) for every integer n in [lo, hi] off one segmented
    // sieve pass. anchor must carry pi(lo - 1). seg_hook(const SweepCursor&)
    // fires at each segment boundary before its values are emitted.
    template <class Fn, class SegHook>
    void pi_sweep(u64 lo, u64 hi, const PiResult& anchor, Fn&& fn, SegHook&& seg_hook) const {
        check_capacity(hi);
        if (lo < 2) throw std::invalid_argument("pi_sweep: lo must be >= 2");
        if (hi < lo) throw std::invalid_argument("pi_sweep: hi < lo");
        if (anchor.n != lo - 1)
            throw std::invalid_argument("pi_sweep: anchor.n = " + std::to_string(anchor.n) +
                                        " does not match lo - 1 = " + std::to_string(lo - 1));
        u64 running = anchor.pi;
        for_each_odd_segment(lo, hi, cfg_.segment_odd_entries(), [&](const OddSegment& seg) {
            seg_hook(SweepCursor{seg.lo, seg.hi, running});
            for (u64 n = seg.lo; n <= seg.hi; ++n) {
                bool prime;
                if (n & 1)
                    prime = seg.odd_is_prime(n);
                else
                    prime = (n == 2);
                running += prime;
                fn(n, running);
            }
        });
    }

    template <class Fn>
    void pi_sweep(u64 lo, u64 hi, const PiResult& anchor, Fn&& fn) const {
        pi_sweep(lo, hi, anchor, std::forward<Fn>(fn), [](const SweepCursor&) {});
    }

    // Checkpoint cache import/export. Imported anchors are validated and
    // cross-checked against anything already cached at the same n.
    void import_checkpoints(const PiCheckpoint& cp) {
        cp.validate();
        std::unique_lock lock(mu_);
        for (const auto& [n, pi] : cp.anchors) {
            auto it = cache_.find(n);
            if (it != cache_.end() && it->second != pi)
                throw integrity_error("checkpoint conflicts with cached value at n = " +
                                      std::to_string(n));
            cache_.emplace(n, pi);
        }
    }

    PiCheckpoint export_checkpoints() const {
        std::shared_lock lock(mu_);
        PiCheckpoint cp;
        cp.anchors.assign(cache_.begin(), cache_.end());
        return cp;
    }

    std::size_t cache_size() const {
        std::shared_lock lock(mu_);
        return cache_.size();
    }

private:
    static void check_capacity(u64 n) {
        if (n >= (1ull << 63))
            throw std::domain_error("n >= 2^63 is out of range for exact prime counting here");
    }

    EngineConfig cfg_;
    mutable std::shared_mutex mu_;
    mutable std::map<u64, u64> cache_;
};

} // namespace pidiv
