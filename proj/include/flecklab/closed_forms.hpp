#pragma once

// Closed-form mod-p evaluators for the Fleck quotient: the three-branch
// digit formula (thm11), the Stirling / higher-order-Bernoulli forms
// (thm12 and its corollaries) and the r-expansion over the zero column
// (thm14). Every evaluator assembles the exact rational value first and
// reduces mod p once at the end, so a non-p-integral intermediate can
// never be silently truncated.

#include <span>
#include <utility>

#include "flecklab/numbers.hpp"

namespace flecklab {

enum class Thm11Branch { LE, GT_ZERO, GT_POS };

// Which branch applied, with the digits n0 = {n}_p and n1 = {n0 - n}_{p-1}
// that selected it.
struct BranchTag {
    Thm11Branch which = Thm11Branch::LE;
    unsigned long n0 = 0;
    unsigned long n1 = 0;

    bool operator==(const BranchTag&) const = default;
};

// F_p(n,r) mod p by the branch formula. In the GT_POS branch, summands
// whose base k-r is divisible by p contribute 0.
std::pair<ResidueClass, BranchTag> thm11_eval(unsigned long p, unsigned long n,
                                              const SignedNumber& r);

// F_p(n,r) mod p via the Stirling route (m >= 0) or the higher-order
// Bernoulli route (m <= 0); m must be congruent to n mod p. The sign
// (-1)^n of the m >= 0 identity is applied internally so the returned
// residue is always F_p(n,r) mod p itself. At m = 0 both routes apply and
// must agree.
ResidueClass thm12_eval(unsigned long p, unsigned long n, const SignedNumber& r,
                        const SignedNumber& m);

// The three equivalent exact-rational forms of the m >= 0 expression with
// nstar = {-n}_{p-1}; exposed so tests can confirm they coincide.
ExactFraction thm12_rhs_stirling_shift(unsigned long nstar, unsigned long m,
                                       const SignedNumber& r);
ExactFraction thm12_rhs_stirling_binom(unsigned long nstar, unsigned long m,
                                       const SignedNumber& r);
ExactFraction thm12_rhs_power_sum(unsigned long nstar, unsigned long m, const SignedNumber& r);

// F_p(p*n, r) = r^nstar / nstar! mod p, nstar = {-n}_{p-1}.
ResidueClass cor11_eval(unsigned long p, unsigned long n, const SignedNumber& r);

// B^{(p-n0)} of the applicable degree at -r, mod p, selected by the same
// branch order relation as thm11: degree n1-n0 when n0 <= n1, degree
// p-n0+n1-1 otherwise.
ResidueClass cor12_eval(unsigned long p, unsigned long n0, unsigned long n1,
                        const SignedNumber& r);

enum class Cor14Mode {
    ZeroColumn, // F_p(n, 0) via the normalized Stirling number
    ShiftedRow, // F_p(p*n + p - 1, r) via the Bernoulli polynomial
};

ResidueClass cor14_eval(unsigned long p, unsigned long n, const SignedNumber& r, Cor14Mode mode);

// F_p(p*n - 2, r) mod p for odd p and 3 <= n <= p.
ResidueClass cor16_eval(unsigned long p, unsigned long n, const SignedNumber& r);

// d = {p^(a-1) - 1 - n}_{phi(p^a)}: the column height of the r-expansion.
unsigned long thm14_column_length(const PrimePower& pp, unsigned long n);

// sum_{k=0..d} binom(r+k-1, k) F_{p^a}(n+k, 0) mod p, where zero_column[k]
// holds F_{p^a}(n+k, 0) mod p and must have length d+1.
ResidueClass thm14_expand_r(const PrimePower& pp, unsigned long n, const SignedNumber& r,
                            std::span<const unsigned long> zero_column);

} // namespace flecklab
