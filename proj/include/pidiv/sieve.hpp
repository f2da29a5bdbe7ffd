// sieve.hpp
// Segmented sieve of Eratosthenes over odd numbers.
//
// Storage convention: 1 bit per odd number, set = prime. The prime 2 is
// handled explicitly by every consumer; even numbers are never stored.
// Segments default to 2^22 odd entries (512 KiB of words), which keeps the
// marking loop inside L2.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <vector>

#include "pidiv/errors.hpp"

namespace pidiv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

// Odd base primes <= limit (2 excluded), via a plain byte sieve.
// limit stays small: callers only need primes up to sqrt of their range.
inline std::vector<u32> odd_base_primes(u32 limit) {
    std::vector<u32> primes;
    if (limit < 3) return primes;
    std::vector<std::uint8_t> composite((limit + 1) / 2, 0); // index i -> odd 2i+1
    const u32 zmax = (isqrt_u64(limit) - 1) / 2;
    for (u32 z = 1; z <= zmax; ++z) {
        if (composite[z]) continue;
        const u32 p = 2 * z + 1;
        for (u64 m = static_cast<u64>(p) * p; m <= limit; m += 2ull * p)
            composite[(m - 1) / 2] = 1;
    }
    for (u32 z = 1; 2ull * z + 1 <= limit; ++z)
        if (!composite[z]) primes.push_back(2 * z + 1);
    return primes;
}

// -------------------------------------------------------
// One sieved segment covering the integers [lo, hi].
// Bit i of words corresponds to the odd number first_odd + 2i.
// -------------------------------------------------------
struct OddSegment {
    u64 lo = 0;
    u64 hi = 0;
    u64 first_odd = 0;
    const u64* words = nullptr;
    u64 bit_count = 0;

    bool odd_is_prime(u64 n) const {
        const u64 idx = (n - first_odd) >> 1;
        return (words[idx >> 6] >> (idx & 63)) & 1ull;
    }

    // Number of odd primes in [a, b] within this segment.
    u64 count_odd_primes(u64 a, u64 b) const {
        a = std::max(a, first_odd);
        if (b > hi) b = hi;
        if (a > b) return 0;
        u64 i = (a - first_odd + 1) >> 1;          // first bit index with value >= a
        const u64 j = (b - first_odd) >> 1;        // last bit index with value <= b
        if (i > j) return 0;
        u64 count = 0;
        u64 wi = i >> 6;
        const u64 wj = j >> 6;
        u64 w = words[wi] >> (i & 63);
        if (wi == wj) {
            const u64 span = j - i + 1;
            if (span < 64) w &= (1ull << span) - 1;
            return static_cast<u64>(std::popcount(w));
        }
        count += static_cast<u64>(std::popcount(w));
        for (++wi; wi < wj; ++wi) count += static_cast<u64>(std::popcount(words[wi]));
        const u64 rem = (j & 63) + 1;
        w = words[wj];
        if (rem < 64) w &= (1ull << rem) - 1;
        count += static_cast<u64>(std::popcount(w));
        return count;
    }
};

namespace detail {

inline void mark_segment(u64 first_odd, u64 last_odd, std::vector<u64>& words,
                         const std::vector<u32>& base_primes) {
    const u64 bits = ((last_odd - first_odd) >> 1) + 1;
    words.assign((bits + 63) / 64, ~0ull);
    for (const u32 p : base_primes) {
        const u64 p2 = static_cast<u64>(p) * p;
        if (p2 > last_odd) break;
        u64 start = std::max(p2, ((first_odd + p - 1) / p) * static_cast<u64>(p));
        if ((start & 1) == 0) start += p;
        for (u64 m = start; m <= last_odd; m += 2ull * p) {
            const u64 idx = (m - first_odd) >> 1;
            words[idx >> 6] &= ~(1ull << (idx & 63));
        }
    }
    if (first_odd == 1) words[0] &= ~1ull; // 1 is not prime
}

} // namespace detail

// Streams sieved segments covering [lo, hi]; fn(const OddSegment&) is called
// in ascending order. segment_odd_entries = number of odd values per segment.
template <class Fn>
inline void for_each_odd_segment(u64 lo, u64 hi, u64 segment_odd_entries, Fn&& fn) {
    if (hi < lo || hi < 1) return;
    const auto base_primes = odd_base_primes(static_cast<u32>(isqrt_u64(hi)));
    std::vector<u64> words;
    u64 seg_lo = lo;
    while (seg_lo <= hi) {
        const u64 first_odd = seg_lo | 1;
        const u64 span = 2 * segment_odd_entries;
        const u64 seg_hi = (hi - seg_lo >= span - 1) ? seg_lo + span - 1 : hi;
        const u64 last_odd = (seg_hi & 1) ? seg_hi : seg_hi - 1;
        if (last_odd >= first_odd) {
            detail::mark_segment(first_odd, last_odd, words, base_primes);
            OddSegment seg{seg_lo, seg_hi, first_odd, words.data(),
                           ((last_odd - first_odd) >> 1) + 1};
            fn(seg);
        } else {
            // segment contains no odd number (possible only for a 1-wide even range)
            OddSegment seg{seg_lo, seg_hi, first_odd, nullptr, 0};
            fn(seg);
        }
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

inline constexpr u64 kDefaultSegmentOddEntries = 1ull << 22;

// Exact count of primes in [lo, hi] by one streaming pass.
inline u64 count_primes_range(u64 lo, u64 hi,
                              u64 segment_odd_entries = kDefaultSegmentOddEntries) {
    if (hi < 2 || hi < lo) return 0;
    u64 count = (lo <= 2 && 2 <= hi) ? 1 : 0;
    for_each_odd_segment(std::max<u64>(lo, 3), hi, segment_odd_entries,
                         [&](const OddSegment& seg) {
                             if (seg.bit_count) count += seg.count_odd_primes(seg.lo, seg.hi);
                         });
    return count;
}

// -------------------------------------------------------
// PrimeBitset: full-range primality for [2, limit], odd-packed.
// -------------------------------------------------------
class PrimeBitset {
public:
    PrimeBitset() = default;
    PrimeBitset(u64 limit, std::vector<u64> words)
        : limit_(limit), words_(std::move(words)) {}

    u64 limit() const { return limit_; }

    bool is_prime(u64 n) const {
        if (n < 2 || n > limit_) return false;
        if (n == 2) return true;
        if ((n & 1) == 0) return false;
        const u64 idx = (n - 3) >> 1;
        return (words_[idx >> 6] >> (idx & 63)) & 1ull;
    }

    u64 count_primes() const {
        if (limit_ < 2) return 0;
        u64 count = 1; // the prime 2
        for (const u64 w : words_) count += static_cast<u64>(std::popcount(w));
        return count;
    }

    u64 memory_bytes() const { return words_.size() * sizeof(u64); }

private:
    u64 limit_ = 0;
    std::vector<u64> words_; // bit i <-> odd 2i+3, set = prime
};

inline constexpr u64 kDefaultBitsetBudgetBytes = 1ull << 30;

// Full primality bitset for [2, limit]. limit 0 or 1 yields an empty result.
// The budget guards the single allocation; use for_each_odd_segment to stream
// ranges beyond it.
inline PrimeBitset sieve_primes(u64 limit,
                                u64 max_bytes = kDefaultBitsetBudgetBytes,
                                u64 segment_odd_entries = kDefaultSegmentOddEntries) {
    if (limit < 3) return PrimeBitset(limit, {});
    const u64 bits = (limit - 3) / 2 + 1;
    const u64 bytes = ((bits + 63) / 64) * sizeof(u64);
    if (bytes > max_bytes)
        throw resource_error("sieve_primes: bitset of " + std::to_string(bytes) +
                             " bytes exceeds budget of " + std::to_string(max_bytes) +
                             "; use the streaming segment interface instead");
    std::vector<u64> words((bits + 63) / 64, 0);
    for_each_odd_segment(3, limit, segment_odd_entries, [&](const OddSegment& seg) {
        // local bit 0 lands at global index (first_odd - 3) / 2; starting the
        // sweep at 3 keeps that index a multiple of segment_odd_entries
        const u64 base = (seg.first_odd - 3) >> 1;
        if ((base & 63) == 0) {
            std::memcpy(words.data() + (base >> 6), seg.words,
                        ((seg.bit_count + 63) / 64) * sizeof(u64));
        } else {
            for (u64 i = 0; i < seg.bit_count; ++i)
                if ((seg.words[i >> 6] >> (i & 63)) & 1ull) {
                    const u64 g = base + i;
                    words[g >> 6] |= 1ull << (g & 63);
                }
        }
    });
    // clear tail bits past `limit` left over from the last whole-word copy
    if (const u64 rem = bits & 63; rem != 0) words.back() &= (1ull << rem) - 1;
    return PrimeBitset(limit, std::move(words));
}

} // namespace pidiv
