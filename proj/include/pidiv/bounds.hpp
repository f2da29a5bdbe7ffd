// bounds.hpp
// Explicit two-sided prime-count bounds, evaluated as certified enclosures:
//
//   Dusart:             n/(ln n - 1)   < pi(n) < n/(ln n - 1.1)   for n >= 60184
//   Rosser-Schoenfeld:  n/(ln n - 0.5) < pi(n) < n/(ln n - 1.5)   for n >= 67
//
// Every bound value is irrational, so each is produced as an exact rational
// interval [lo, hi] guaranteed to contain it. Comparisons against the
// integer pi(n) are made against the far endpoint and escalate precision
// when the integer falls inside the interval, so no verdict ever depends on
// a single rounded value.

#pragma once

#include <utility>

#include "pidiv/certified.hpp"
#include "pidiv/pi_engine.hpp"

namespace pidiv {

inline constexpr u64 kDusartThreshold = 60184;
inline constexpr u64 kRosserSchoenfeldThreshold = 67;

// Exact rational interval [lo, hi] with lo < value < hi.
struct RationalInterval {
    mpq_class lo, hi;

    bool strictly_contains(const mpq_class& q) const { return lo < q && q < hi; }
    mpq_class width() const { return hi - lo; }
};

namespace detail {

// Enclosure of n / (ln n + tenths/10) at the given working precision.
inline RationalInterval ratio_of_log_at(u64 n, int tenths, unsigned bits) {
    MpFloat xl(bits), xh(bits), dl(bits), dh(bits), vl(bits), vh(bits);
    mpfr_set_ui(xl.get(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_log(xl.get(), xl.get(), MPFR_RNDD);
    mpfr_set_ui(xh.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_log(xh.get(), xh.get(), MPFR_RNDU);
    add_tenths(dl.get(), xl.get(), tenths, MPFR_RNDD);
    add_tenths(dh.get(), xh.get(), tenths, MPFR_RNDU);
    if (mpfr_sgn(dl.get()) <= 0)
        throw std::domain_error("bound denominator ln n + shift is not positive");
    // denominator interval [dl, dh]; n/x is decreasing in x
    mpfr_ui_div(vl.get(), static_cast<unsigned long>(n), dh.get(), MPFR_RNDD);
    mpfr_ui_div(vh.get(), static_cast<unsigned long>(n), dl.get(), MPFR_RNDU);
    return {to_mpq(vl.get()), to_mpq(vh.get())};
}

// Enclosure of ln n + tenths/10 itself.
inline RationalInterval shifted_log_at(u64 n, int tenths, unsigned bits) {
    MpFloat xl(bits), xh(bits), sl(bits), sh(bits);
    mpfr_set_ui(xl.get(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_log(xl.get(), xl.get(), MPFR_RNDD);
    mpfr_set_ui(xh.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_log(xh.get(), xh.get(), MPFR_RNDU);
    add_tenths(sl.get(), xl.get(), tenths, MPFR_RNDD);
    add_tenths(sh.get(), xh.get(), tenths, MPFR_RNDU);
    return {to_mpq(sl.get()), to_mpq(sh.get())};
}

inline bool narrow_enough(const RationalInterval& r, double rel) {
    // width <= rel * lo, in exact arithmetic
    return r.lo > 0 && mpq_class(r.hi - r.lo) <= mpq_class(r.lo * mpq_class(rel));
}

} // namespace detail

inline constexpr double kBoundRelativeWidth = 1e-12;

// Both Dusart bound values for n >= 60184, each as a certified enclosure of
// relative width <= 1e-12 (tightened further on demand by check_* below).
inline std::pair<RationalInterval, RationalInterval> dusart_bounds(u64 n,
                                                                   PrecisionPolicy policy = {}) {
    if (n < kDusartThreshold)
        throw std::domain_error("dusart_bounds: asserted only for n >= 60184, got " +
                                std::to_string(n));
    unsigned bits = policy.start_bits;
    for (;;) {
        auto lower = detail::ratio_of_log_at(n, -10, bits);
        auto upper = detail::ratio_of_log_at(n, -11, bits);
        if (detail::narrow_enough(lower, kBoundRelativeWidth) &&
            detail::narrow_enough(upper, kBoundRelativeWidth))
            return {std::move(lower), std::move(upper)};
        bits = policy.next(bits);
    }
}

inline std::pair<RationalInterval, RationalInterval> rosser_schoenfeld_bounds(
    u64 n, PrecisionPolicy policy = {}) {
    if (n < kRosserSchoenfeldThreshold)
        throw std::domain_error("rosser_schoenfeld_bounds: asserted only for n >= 67, got " +
                                std::to_string(n));
    unsigned bits = policy.start_bits;
    for (;;) {
        auto lower = detail::ratio_of_log_at(n, -5, bits);
        auto upper = detail::ratio_of_log_at(n, -15, bits);
        if (detail::narrow_enough(lower, kBoundRelativeWidth) &&
            detail::narrow_enough(upper, kBoundRelativeWidth))
            return {std::move(lower), std::move(upper)};
        bits = policy.next(bits);
    }
}

// Certified enclosures of (ln n - 1.1, ln n - 1): the open interval that
// must strictly contain the exact rational n/pi(n) for n >= 60184.
inline std::pair<RationalInterval, RationalInterval> ratio_bracket(u64 n,
                                                                   PrecisionPolicy policy = {}) {
    if (n < kDusartThreshold)
        throw std::domain_error("ratio_bracket: asserted only for n >= 60184, got " +
                                std::to_string(n));
    unsigned bits = policy.start_bits;
    for (;;) {
        auto low = detail::shifted_log_at(n, -11, bits);
        auto high = detail::shifted_log_at(n, -10, bits);
        if (detail::narrow_enough(low, kBoundRelativeWidth) &&
            detail::narrow_enough(high, kBoundRelativeWidth))
            return {std::move(low), std::move(high)};
        bits = policy.next(bits);
    }
}

struct BoundCheck {
    u64 n = 0;
    RationalInterval lower, upper;
    u64 pi = 0;
    bool holds = false;
};

namespace detail {

// Decides value < pi (resp. pi < value) where value is known only through an
// enclosure; escalates until pi is outside the enclosure.
template <class Recompute>
inline bool certified_less_than_pi(RationalInterval enc, u64 pi, unsigned bits,
                                   const PrecisionPolicy& policy, Recompute&& recompute) {
    const mpq_class q(static_cast<unsigned long>(pi));
    for (;;) {
        if (enc.hi < q) return true;
        if (enc.lo > q) return false;
        bits = policy.next(bits);
        enc = recompute(bits);
    }
}

} // namespace detail

// Full certified verdict: lower < pi(n) < upper with both comparisons
// decided against enclosure endpoints.
inline BoundCheck check_dusart(u64 n, u64 pi, PrecisionPolicy policy = {}) {
    auto [lower, upper] = dusart_bounds(n, policy);
    BoundCheck out{n, lower, upper, pi, false};
    const bool low_ok = detail::certified_less_than_pi(
        lower, pi, policy.start_bits, policy,
        [&](unsigned b) { return detail::ratio_of_log_at(n, -10, b); });
    const mpq_class q(static_cast<unsigned long>(pi));
    bool high_ok;
    {
        RationalInterval enc = upper;
        unsigned bits = policy.start_bits;
        for (;;) {
            if (q < enc.lo) { high_ok = true; break; }
            if (q > enc.hi) { high_ok = false; break; }
            bits = policy.next(bits);
            enc = detail::ratio_of_log_at(n, -11, bits);
        }
    }
    out.holds = low_ok && high_ok;
    return out;
}

inline BoundCheck check_rosser_schoenfeld(u64 n, u64 pi, PrecisionPolicy policy = {}) {
    auto [lower, upper] = rosser_schoenfeld_bounds(n, policy);
    BoundCheck out{n, lower, upper, pi, false};
    const bool low_ok = detail::certified_less_than_pi(
        lower, pi, policy.start_bits, policy,
        [&](unsigned b) { return detail::ratio_of_log_at(n, -5, b); });
    const mpq_class q(static_cast<unsigned long>(pi));
    bool high_ok;
    {
        RationalInterval enc = upper;
        unsigned bits = policy.start_bits;
        for (;;) {
            if (q < enc.lo) { high_ok = true; break; }
            if (q > enc.hi) { high_ok = false; break; }
            bits = policy.next(bits);
            enc = detail::ratio_of_log_at(n, -15, bits);
        }
    }
    out.holds = low_ok && high_ok;
    return out;
}

} // namespace pidiv
