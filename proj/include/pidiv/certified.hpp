// certified.hpp
// Interval enclosures of ln(n) and e^x tight enough that every floor,
// ceiling, and comparison consumed by the divisibility criteria is decided
// unambiguously. No raw double-precision floors anywhere: a misrounded
// floor of ln(n) + shift silently breaks every check built on top.
//
// All shifts used by the criteria are exact multiples of 1/10, so they are
// passed around as integer tenths (0, -1, -5, -10, -11, -15).
//
// Termination: ln(n) + k/10 is irrational for integer n > 1, and e^r is
// irrational for rational r != 0, so a finite precision always separates
// the enclosure from the nearest integer (or digit boundary). Precision
// escalates 53 -> 128 -> 256 -> ... up to a hard cap; hitting the cap is
// treated as an implementation bug, not an input condition.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pidiv/sieve.hpp" // u64

namespace pidiv {

struct PrecisionPolicy {
    unsigned start_bits = 53;
    unsigned cap_bits = 4096;

    unsigned next(unsigned bits) const {
        const unsigned nxt = bits < 128 ? 128 : bits * 2;
        if (nxt > cap_bits)
            throw std::logic_error(
                "certified enclosure still ambiguous at the precision cap (" +
                std::to_string(cap_bits) + " bits); this indicates a bug, not an input");
        return nxt;
    }
};

namespace detail {

// RAII wrapper for a single mpfr_t.
class MpFloat {
public:
    explicit MpFloat(mpfr_prec_t prec = 53) { mpfr_init2(v_, prec); }
    MpFloat(const MpFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpFloat(MpFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MpFloat& operator=(const MpFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpFloat& operator=(MpFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpFloat() { mpfr_clear(v_); }

    void set_prec(mpfr_prec_t prec) { mpfr_set_prec(v_, prec); } // destroys value
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// out <- x + tenths/10, rounded in direction rnd (a valid one-sided bound
// because the 1/10 division itself is rounded the same way).
inline void add_tenths(mpfr_ptr out, mpfr_srcptr x, int tenths, mpfr_rnd_t rnd) {
    MpFloat s(mpfr_get_prec(out));
    mpfr_set_si(s.get(), tenths, rnd);
    mpfr_div_ui(s.get(), s.get(), 10, rnd);
    mpfr_add(out, x, s.get(), rnd);
}

inline mpq_class to_mpq(mpfr_srcptr x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

} // namespace detail

// -------------------------------------------------------
// CertifiedLog: an enclosure lo < ln(n) < hi whose precision escalates on
// demand until the requested discrete decision is unambiguous.
// -------------------------------------------------------
class CertifiedLog {
public:
    explicit CertifiedLog(mpz_class n, PrecisionPolicy policy = {})
        : n_(std::move(n)), policy_(policy), bits_(policy.start_bits), lo_(bits_), hi_(bits_) {
        if (n_ < 2) throw std::domain_error("CertifiedLog: n must be an integer >= 2");
        recompute();
    }
    explicit CertifiedLog(u64 n, PrecisionPolicy policy = {})
        : CertifiedLog(mpz_class(static_cast<unsigned long>(n)), policy) {}

    const mpz_class& n() const { return n_; }
    unsigned precision_bits() const { return bits_; }

    // Exact dyadic endpoints of the current enclosure.
    mpq_class lower() const { return detail::to_mpq(lo_.get()); }
    mpq_class upper() const { return detail::to_mpq(hi_.get()); }

    // floor(ln n + tenths/10), certified.
    long floor_shifted(int tenths) {
        for (;;) {
            const long flo = bound_floor(lo_.get(), tenths, MPFR_RNDD);
            const long fhi = bound_floor(hi_.get(), tenths, MPFR_RNDU);
            if (flo == fhi) return flo;
            escalate();
        }
    }

    // ceil(ln n + tenths/10), certified.
    long ceil_shifted(int tenths) {
        for (;;) {
            const long clo = bound_ceil(lo_.get(), tenths, MPFR_RNDD);
            const long chi = bound_ceil(hi_.get(), tenths, MPFR_RNDU);
            if (clo == chi) return clo;
            escalate();
        }
    }

    // First decimal digit of frac(ln n), i.e. floor(10 * frac(ln n)).
    int frac_first_digit() {
        const long f = floor_shifted(0);
        for (;;) {
            const long dlo = frac_digit_bound(lo_.get(), f, MPFR_RNDD);
            const long dhi = frac_digit_bound(hi_.get(), f, MPFR_RNDU);
            if (dlo == dhi) return static_cast<int>(dlo);
            escalate();
        }
    }

    // frac(ln n) < 1/10, decided by direct comparison against a one-sided
    // enclosure of 1/10 (equality is impossible for integer n > 1).
    bool frac_below_tenth() {
        const long f = floor_shifted(0);
        detail::MpFloat fl(bits_), fh(bits_), tl(bits_), th(bits_);
        for (;;) {
            fl.set_prec(bits_);
            fh.set_prec(bits_);
            tl.set_prec(bits_);
            th.set_prec(bits_);
            mpfr_sub_si(fl.get(), lo_.get(), f, MPFR_RNDD);
            mpfr_sub_si(fh.get(), hi_.get(), f, MPFR_RNDU);
            mpfr_set_ui(tl.get(), 1, MPFR_RNDD);
            mpfr_div_ui(tl.get(), tl.get(), 10, MPFR_RNDD);
            mpfr_set_ui(th.get(), 1, MPFR_RNDU);
            mpfr_div_ui(th.get(), th.get(), 10, MPFR_RNDU);
            if (mpfr_less_p(fh.get(), tl.get())) return true;
            if (mpfr_greater_p(fl.get(), th.get())) return false;
            escalate();
        }
    }

    // Shrink the enclosure until (hi - lo) <= lo * rel_width. Useful when the
    // consumer needs a width guarantee rather than a floor decision.
    void tighten_relative(double rel_width) {
        detail::MpFloat diff(bits_), target(bits_);
        for (;;) {
            diff.set_prec(bits_);
            target.set_prec(bits_);
            mpfr_sub(diff.get(), hi_.get(), lo_.get(), MPFR_RNDU);
            mpfr_mul_d(target.get(), lo_.get(), rel_width, MPFR_RNDD);
            if (mpfr_lessequal_p(diff.get(), target.get())) return;
            escalate();
        }
    }

private:
    void recompute() {
        lo_.set_prec(bits_);
        hi_.set_prec(bits_);
        detail::MpFloat t(bits_);
        mpfr_set_z(t.get(), n_.get_mpz_t(), MPFR_RNDD);
        mpfr_log(lo_.get(), t.get(), MPFR_RNDD);
        mpfr_set_z(t.get(), n_.get_mpz_t(), MPFR_RNDU);
        mpfr_log(hi_.get(), t.get(), MPFR_RNDU);
    }

    void escalate() {
        bits_ = policy_.next(bits_);
        recompute();
    }

    long bound_floor(mpfr_srcptr x, int tenths, mpfr_rnd_t rnd) const {
        detail::MpFloat t(bits_);
        detail::add_tenths(t.get(), x, tenths, rnd);
        return mpfr_get_si(t.get(), MPFR_RNDD);
    }

    long bound_ceil(mpfr_srcptr x, int tenths, mpfr_rnd_t rnd) const {
        detail::MpFloat t(bits_);
        detail::add_tenths(t.get(), x, tenths, rnd);
        return mpfr_get_si(t.get(), MPFR_RNDU);
    }

    long frac_digit_bound(mpfr_srcptr x, long f, mpfr_rnd_t rnd) const {
        detail::MpFloat t(bits_);
        mpfr_sub_si(t.get(), x, f, rnd);
        mpfr_mul_ui(t.get(), t.get(), 10, rnd);
        return mpfr_get_si(t.get(), MPFR_RNDD);
    }

    mpz_class n_;
    PrecisionPolicy policy_;
    unsigned bits_;
    detail::MpFloat lo_, hi_;
};

// Builds an enclosure pre-escalated so that floor and ceiling of
// ln(n) + s are decided for every shift s in shift_tenths.
inline CertifiedLog certified_log(const mpz_class& n, const std::vector<int>& shift_tenths,
                                  PrecisionPolicy policy = {}) {
    CertifiedLog log(n, policy);
    for (const int t : shift_tenths) {
        log.floor_shifted(t);
        log.ceil_shifted(t);
    }
    return log;
}

// -------------------------------------------------------
// Certified integer neighbors of e^(c + tenths/10).
// -------------------------------------------------------
namespace detail {

template <class Decide>
inline mpz_class exp_neighbor(long c, int tenths, PrecisionPolicy policy, Decide&& decide) {
    unsigned bits = policy.start_bits;
    for (;;) {
        MpFloat xl(bits), xh(bits), el(bits), eh(bits);
        mpfr_set_si(xl.get(), c, MPFR_RNDD);
        add_tenths(xl.get(), xl.get(), tenths, MPFR_RNDD);
        mpfr_set_si(xh.get(), c, MPFR_RNDU);
        add_tenths(xh.get(), xh.get(), tenths, MPFR_RNDU);
        mpfr_exp(el.get(), xl.get(), MPFR_RNDD);
        mpfr_exp(eh.get(), xh.get(), MPFR_RNDU);
        mpz_class a, b;
        decide(a.get_mpz_t(), el.get());
        decide(b.get_mpz_t(), eh.get());
        if (a == b) return a;
        bits = policy.next(bits);
    }
}

} // namespace detail

// ceil(e^(c + tenths/10)) as an exact integer.
inline mpz_class ceil_exp_tenths(long c, int tenths = 0, PrecisionPolicy policy = {}) {
    return detail::exp_neighbor(c, tenths, policy,
                                [](mpz_ptr z, mpfr_srcptr x) { mpfr_get_z(z, x, MPFR_RNDU); });
}

// floor(e^(c + tenths/10)) as an exact integer.
inline mpz_class floor_exp_tenths(long c, int tenths = 0, PrecisionPolicy policy = {}) {
    return detail::exp_neighbor(c, tenths, policy,
                                [](mpz_ptr z, mpfr_srcptr x) { mpfr_get_z(z, x, MPFR_RNDD); });
}

// Narrows a big integer into u64, or reports which capacity was exceeded.
inline u64 to_u64_checked(const mpz_class& z, const char* what) {
    if (z < 0 || !z.fits_ulong_p())
        throw resource_error(std::string(what) + " exceeds the 64-bit capacity of this build");
    return static_cast<u64>(z.get_ui());
}

} // namespace pidiv
