#pragma once

// The congruence-verification engine. Left-hand sides always come from
// direct big-integer summation (the fleck-sums oracle layer); right-hand
// sides come from the formula under test. Suites iterate deterministic
// parameter grids and may fan out across worker threads, with reports
// merged in parameter order regardless of completion order.

#include <functional>
#include <optional>
#include <vector>

#include "flecklab/fleck_sums.hpp"
#include "flecklab/report.hpp"

namespace flecklab {

// Alternating difference of Fleck quotients along an arithmetic
// progression of row indices with step p^a(p-1):
//   sum_{k=0..n} binom(n,k)(-1)^k F_p(k p^a (p-1) + l, r) = 0
// modulo p^(a n + ceil((n - l*)/(p-1))), l* = {-l}_{p-1}. A nonpositive
// exponent normalizes to modulus 1.
CongruenceReport check_thm13(unsigned long p, unsigned a, unsigned long l, unsigned long n,
                             const SignedNumber& r);

// The three Kummer-style consequences (n = 1, 2, 3) with moduli p^a,
// p^(2a), p^(3a).
std::vector<CongruenceReport> check_kummer_family(unsigned long p, unsigned a, unsigned long l,
                                                  const SignedNumber& r);

enum class RemarkCheck {
    All,
    Wolstenholme,        // binom(2p-1, p-1) = 1 (mod p^3)
    WolstenholmeGeneral, // binom(2pn-1, pn-1) vs the alternating block sum (mod p^(2n+1))
    Glaisher,            // binom(pn-1, p-1) = 1 - n(n-1)/3 p^3 B_{p-3} (mod p^4)
    FleckBernoulli,      // every-p-th-column sum vs (n-1)! B_{p-n} p^n (mod p^(n+1))
    FleckClassNumber,    // the same sum at n = (p-1)/2 vs h(-p) (mod p^((p+1)/2))
    BernoulliPolyRow,    // binom(2p-1, p+r) + (-1)^p binom(2p-1, r) vs p^2 B_{p-2}(-r) (mod p^3)
};

// Instantiates the selected congruence family for one prime p >= 5 over
// its full legal sub-parameter range.
std::vector<CongruenceReport> check_remark_family(unsigned long p, RemarkCheck selector);

// F_p(p(p-1)/2, r) mod p against the class-number branch value: the
// Mordell sign times (r/p) when 4 | p+1, the Chowla sign times (r/p) v/2
// when 4 | p-1. Requires p > 3.
CongruenceReport check_cor11_classnumber(unsigned long p, const SignedNumber& r);

// Counts residue classes r in [0, p) whose sum attains the valuation
// floor exactly; at least p - {-n}_{p-1} of them must. Reported as a
// deficit: lhs = max(0, required - count), rhs = 0, with count and
// required recorded in params.
CongruenceReport check_sharpness(unsigned long p, unsigned long n);

struct PeriodCheck {
    CongruenceReport congruence; // F_{p^a}(n + p^a(p-1), r) = F_{p^a}(n, r) (mod p)
    bool floor_attained = false; // some r in [0, p^a) attains the valuation floor at n
    unsigned long attained_count = 0;
};

// Requires exponent >= 2 and n >= 2 p^(a-1).
PeriodCheck check_thm14_period(const PrimePower& pp, unsigned long n, const SignedNumber& r);

// Existence record derived from the attained count (lhs is 1 when no
// class attains the floor, else 0).
CongruenceReport floor_attained_report(const PrimePower& pp, unsigned long n,
                                       unsigned long attained_count);

// ---- deterministic suites ------------------------------------------------

struct Thm11SuiteRange {
    unsigned long p_lo = 2, p_hi = 13;
    unsigned long n_lo = 1, n_hi = 500;
};
std::vector<CongruenceReport> suite_thm11(const Thm11SuiteRange& range = {}, unsigned jobs = 1);

struct Thm12SuiteRange {
    unsigned long p_lo = 2, p_hi = 13;
    unsigned long n_lo = 0, n_hi = 200;
};
std::vector<CongruenceReport> suite_thm12(const Thm12SuiteRange& range = {}, unsigned jobs = 1);

struct Thm13SuiteRange {
    unsigned long p_lo = 2, p_hi = 7;
    unsigned a_lo = 0, a_hi = 2;
    unsigned long l_lo = 0, l_hi = 10;
    unsigned long n_lo = 0, n_hi = 4;
};
std::vector<CongruenceReport> suite_thm13(const Thm13SuiteRange& range = {}, unsigned jobs = 1);

struct KummerSuiteRange {
    unsigned long p_lo = 2, p_hi = 7;
    unsigned a_lo = 0, a_hi = 2;
    unsigned long l_lo = 0, l_hi = 10;
};
std::vector<CongruenceReport> suite_kummer(const KummerSuiteRange& range = {}, unsigned jobs = 1);

struct RemarkSuiteRange {
    unsigned long p_lo = 5, p_hi = 31;
    RemarkCheck selector = RemarkCheck::All;
};
std::vector<CongruenceReport> suite_remark(const RemarkSuiteRange& range = {}, unsigned jobs = 1);

struct ClassnumSuiteRange {
    unsigned long p_lo = 5, p_hi = 101;
};
std::vector<CongruenceReport> suite_classnum(const ClassnumSuiteRange& range = {},
                                             unsigned jobs = 1);

struct SharpnessSuiteRange {
    unsigned long p_lo = 2, p_hi = 13;
    unsigned long n_lo = 1, n_hi = 300;
};
std::vector<CongruenceReport> suite_sharpness(const SharpnessSuiteRange& range = {},
                                              unsigned jobs = 1);

struct PeriodSuiteRange {
    unsigned long modulus_cap = 9; // prime powers p^a with a >= 2, p^a <= cap
    unsigned long span_multiplier = 3; // n up to 2p^(a-1) + multiplier * p^a(p-1)
};
std::vector<CongruenceReport> suite_period(const PeriodSuiteRange& range = {},
                                           unsigned jobs = 1);

// ---- conjecture scan -------------------------------------------------------

struct ScanCursor {
    unsigned long p = 0;
    unsigned a = 0, b = 0;
    unsigned long n = 0;
    SignedNumber r;
};

struct ConjectureScanOptions {
    unsigned long p_lo = 2, p_hi = 3;
    unsigned a_lo = 1, a_hi = 2;
    unsigned b_lo = 1, b_hi = 2;
    unsigned long n_max = 200;
    // inclusive r bounds; defaults to one full period [0, p^a - 1]
    std::optional<std::pair<SignedNumber, SignedNumber>> r_range;
    // resume after this completed (p, a, b, n) row
    std::optional<ScanCursor> resume_after;
    // invoked after each completed (p, a, b, n) row
    std::function<void(const ScanCursor&)> progress;
    // a failed exact division contradicts a theorem and aborts the scan by
    // default; exploratory runs may record it as a witness instead
    bool downgrade_integrality = false;
};

// Tests F_{p^a}(n + phi(p^(a+b)), r) = F_{p^a}(n, r) (mod p^b) for every
// instance with 2 p^(a+b-2) <= n <= n_max, in lexicographic (p, a, b, n, r)
// order. Candidate violations are re-verified with a fresh recomputation
// before being recorded.
ScanResult scan_conjecture11(const ConjectureScanOptions& options = {});

} // namespace flecklab
