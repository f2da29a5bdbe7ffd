// predicates.hpp
// Floor-function divisibility criteria on top of certified logarithms.
//
// For integers n >= 60184:
//   g(n) = |floor(frac(ln n) - 0.1)|          (1 iff frac(ln n) < 0.1)
//   h(n) = floor(floor(n/D) * D / n),  D = floor(ln n - 1)
//                                             (1 iff D divides n)
//   f(n) = g(n) * h(n)
// f(n) = 0 certifies pi(n) does not divide n. The converse does not hold:
// f(n) = 1 only marks a candidate. Below 60184 the same arithmetic can be
// evaluated in advisory mode, but no verdict is binding there.
//
// h is computed as the exact integer divisibility test; the literal nested
// floor formula is kept as a test oracle.

#pragma once

#include <array>
#include <string>

#include "pidiv/certified.hpp"
#include "pidiv/errors.hpp"

namespace pidiv {

inline constexpr u64 kPredicateThreshold = 60184; // theorems are silent below

enum class Verdict { NotDivisible_ByF, NotDivisible_ByFrac, Candidate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NotDivisible_ByF: return "NotDivisible_ByF";
        case Verdict::NotDivisible_ByFrac: return "NotDivisible_ByFrac";
        case Verdict::Candidate: return "Candidate";
    }
    return "?";
}

struct PredicateReport {
    mpz_class n;
    int g = 0;
    int h = 0;
    int f = 0;
    int frac_digit = 0;        // first decimal digit of frac(ln n)
    long divisor_candidate = 0; // floor(ln n - 1)
    bool divides = false;       // divisor_candidate | n
    Verdict verdict = Verdict::Candidate;
    bool binding = false;       // n >= 60184
};

namespace detail {

inline void require_threshold(const mpz_class& n, const char* fn) {
    if (n < static_cast<unsigned long>(kPredicateThreshold))
        throw std::domain_error(std::string(fn) + ": asserted only for n >= 60184, got " +
                                n.get_str());
}

} // namespace detail

// First decimal digit of frac(ln n), for any integer n >= 2.
inline int frac_digit(const mpz_class& n, PrecisionPolicy policy = {}) {
    if (n < 2) throw std::domain_error("frac_digit: n must be an integer >= 2");
    return CertifiedLog(n, policy).frac_first_digit();
}

inline int g_predicate(const mpz_class& n, PrecisionPolicy policy = {}) {
    detail::require_threshold(n, "g_predicate");
    return CertifiedLog(n, policy).frac_below_tenth() ? 1 : 0;
}

inline int h_predicate(const mpz_class& n, PrecisionPolicy policy = {}) {
    detail::require_threshold(n, "h_predicate");
    const long d = CertifiedLog(n, policy).floor_shifted(-10);
    return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d)) ? 1 : 0;
}

// Full evaluation; advisory = true permits 8 <= n < 60184 with a non-binding
// verdict (below 8 the divisor floor(ln n - 1) is not positive).
inline PredicateReport evaluate_predicates(const mpz_class& n, bool advisory = false,
                                           PrecisionPolicy policy = {}) {
    if (!advisory) detail::require_threshold(n, "evaluate_predicates");
    if (n < 8)
        throw std::domain_error("evaluate_predicates: n must be >= 8 even in advisory mode");
    CertifiedLog log(n, policy);
    PredicateReport rep;
    rep.n = n;
    rep.binding = n >= static_cast<unsigned long>(kPredicateThreshold);
    rep.frac_digit = log.frac_first_digit();
    rep.g = log.frac_below_tenth() ? 1 : 0;
    rep.divisor_candidate = log.floor_shifted(-10);
    rep.divides =
        mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(rep.divisor_candidate)) != 0;
    rep.h = rep.divides ? 1 : 0;
    rep.f = rep.g * rep.h;
    rep.verdict = rep.g == 0   ? Verdict::NotDivisible_ByFrac
                  : rep.h == 0 ? Verdict::NotDivisible_ByF
                               : Verdict::Candidate;
    return rep;
}

inline int f_predicate(const mpz_class& n, PrecisionPolicy policy = {}) {
    detail::require_threshold(n, "f_predicate");
    return evaluate_predicates(n, false, policy).f;
}

// -------------------------------------------------------
// The six-way equality chain. Whenever pi(n) | n with n >= 60184, all of
//   ceil(ln n - 1.5), floor(ln n - 0.5), floor(ln n - 1),
//   floor(ln n - 1.1) + 1, ceil(ln n - 1.1), ceil(ln n - 1) - 1
// must equal n/pi(n). A failed chain is a falsification event and throws;
// it is never returned quietly.
// -------------------------------------------------------
struct EqualityChain {
    u64 n = 0;
    u64 pi = 0;
    u64 ratio = 0; // n / pi
    std::array<long, 6> values{};
    bool all_equal = false;
};

inline EqualityChain equality_chain(u64 n, u64 pi, PrecisionPolicy policy = {}) {
    if (n < kPredicateThreshold)
        throw std::domain_error("equality_chain: asserted only for n >= 60184");
    if (pi == 0 || n % pi != 0)
        throw std::invalid_argument(
            "equality_chain: chain asserted only when n/pi(n) is an integer");
    CertifiedLog log(n, policy);
    EqualityChain chain;
    chain.n = n;
    chain.pi = pi;
    chain.ratio = n / pi;
    chain.values = {log.ceil_shifted(-15),      log.floor_shifted(-5),
                    log.floor_shifted(-10),     log.floor_shifted(-11) + 1,
                    log.ceil_shifted(-11),      log.ceil_shifted(-10) - 1};
    chain.all_equal = true;
    for (const long v : chain.values)
        if (v != chain.values[0]) chain.all_equal = false;
    if (!chain.all_equal || chain.values[0] < 0 ||
        static_cast<u64>(chain.values[0]) != chain.ratio) {
        std::string detail = "n = " + std::to_string(n) + ", pi = " + std::to_string(pi) +
                             ", n/pi = " + std::to_string(chain.ratio) + ", chain =";
        for (const long v : chain.values) detail += " " + std::to_string(v);
        throw falsification_error("equality-chain", detail);
    }
    return chain;
}

} // namespace pidiv
