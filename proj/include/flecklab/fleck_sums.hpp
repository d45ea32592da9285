#pragma once

// Direct exact evaluation of the alternating binomial sums C_m(n,r), the
// Fleck quotient F_p(n,r), its prime-power generalization F_{p^a}(n,r),
// and the mod-p recurrence that relates rows n and n-p+1. These direct
// big-integer sums are the oracle layer every closed form is checked
// against, so nothing here may depend on the closed-form evaluators.

#include <span>
#include <vector>

#include "flecklab/numbers.hpp"

namespace flecklab {

// An exact (generalized) Fleck quotient together with the normalization
// that produced it. When floor_exponent >= 0,
//   raw_sum = (-p)^floor_exponent * (value - bracket_correction);
// when floor_exponent < 0,
//   value = (-p)^(-floor_exponent) * raw_sum + bracket_correction.
struct FleckValue {
    SignedNumber value;
    SignedNumber raw_sum;
    SignedNumber floor_exponent;
    int bracket_correction = 0;

    bool operator==(const FleckValue&) const = default;
};

struct FleckQuery {
    PrimePower pp;
    unsigned long n = 0;
    SignedNumber r;
};

// Upper bound on n accepted by the direct sums (default 10^6); evaluations
// above it throw ResourceLimitError.
unsigned long max_sum_n();
void set_max_sum_n(unsigned long limit);

// C_m(n,r) = sum over 0 <= k <= n, k = r (mod m) of binom(n,k)(-1)^k.
// Depends on r only through r mod m.
SignedNumber alternating_sum(const SignedNumber& m, unsigned long n, const SignedNumber& r);

// All residue classes of one row at once: entry r of the result is
// C_m(n,r). One pass over k, so it costs the same as a single class.
std::vector<SignedNumber> alternating_sum_row(unsigned long m, unsigned long n);

// floor((n-1)/(p-1)); equals -1 at n = 0.
SignedNumber fleck_floor(unsigned long p, unsigned long n);

// floor((n - p^(a-1)) / phi(p^a)); negative for n < p^(a-1).
SignedNumber weisman_floor(const PrimePower& pp, unsigned long n);

// F_p(n,r) = (-p)^(-floor((n-1)/(p-1))) C_p(n,r) + [n = 0].
FleckValue fleck_quotient(unsigned long p, unsigned long n, const SignedNumber& r);

// F_{p^a}(n,r) = (-p)^(-floor((n-p^(a-1))/phi(p^a))) C_{p^a}(n,r) + [n < p^(a-1)].
// Integral for every n, r; a failed exact division throws IntegralityError.
FleckValue generalized_fleck(const PrimePower& pp, unsigned long n, const SignedNumber& r);

// Entry r of the result is the quotient for residue class r, 0 <= r < p^a.
std::vector<FleckValue> generalized_fleck_row(const PrimePower& pp, unsigned long n);
std::vector<FleckValue> fleck_quotient_row(unsigned long p, unsigned long n);

// Right-hand side of the row recurrence
//   F_p(n,r) = -sum_{j=1..p-1} (1/j) sum_{i=0..j-1} F_p(n-p+1, r-i)  (mod p)
// for n >= p. lower_mod_p[c] must hold F_p(n-p+1, c) mod p for each
// residue class c in [0, p).
ResidueClass recurrence_mod_p(unsigned long p, unsigned long n, const SignedNumber& r,
                              std::span<const unsigned long> lower_mod_p);

} // namespace flecklab
