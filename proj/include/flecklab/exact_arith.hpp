#pragma once

// Exact integer/rational arithmetic primitives: generalized binomials,
// least residues, p-adic valuation, the Legendre symbol and Fermat
// quotients. All operations are pure and safe to call concurrently.

#include "flecklab/numbers.hpp"

namespace flecklab {

// Generalized binomial coefficient with integer upper argument:
// 0 when k < 0, otherwise prod_{i=1..k} (n-i+1)/i. Matches the ordinary
// binomial for 0 <= k <= n and supports negative n.
SignedNumber binomial(const SignedNumber& n, const SignedNumber& k);

// Least nonnegative residue of a mod m (m >= 1), correct for negative a.
ResidueClass least_residue(const SignedNumber& a, const SignedNumber& m);

// Largest e with p^e | x; infinite when x = 0.
ExtendedOrder p_adic_order(const SignedNumber& x, const SignedNumber& p);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion with
// modular exponentiation. Returns 0 iff p | a, otherwise +1 or -1.
int legendre(const SignedNumber& a, const SignedNumber& p);

// Fermat quotient q_p(a) = (a^(p-1) - 1)/p. Throws NonUnitError when p | a.
SignedNumber fermat_quotient(const SignedNumber& a, const SignedNumber& p);

// Reduction of a rational with unit denominator mod m (numerator times the
// inverse of the denominator). Throws NonUnitDenominatorError when
// gcd(denominator, m) > 1.
ResidueClass rational_mod(const ExactFraction& x, const SignedNumber& m);
ResidueClass rational_mod_p(const ExactFraction& x, const SignedNumber& p);

} // namespace flecklab
