#pragma once

// Foundational exact number types. Arbitrary-precision integers and
// rationals are carried by GMP; everything in this library is exact and
// no floating point appears anywhere.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "flecklab/error.hpp"

namespace flecklab {

// Arbitrary-precision signed integer. Canonical GMP form already satisfies
// sign = 0 iff magnitude = 0.
using SignedNumber = mpz_class;

// Arbitrary-precision rational in lowest terms with positive denominator.
// Constructed through make_fraction (or GMP arithmetic, which keeps the
// canonical form); mpq_class(num, den) alone does not canonicalize.
using ExactFraction = mpq_class;

ExactFraction make_fraction(const SignedNumber& numerator, const SignedNumber& denominator);

// Deterministic primality check by trial division; adequate at desk scale.
bool is_prime(const SignedNumber& n);

// Primes in [lo, hi], ascending.
std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi);

// Least nonnegative residue value together with its modulus.
struct ResidueClass {
    SignedNumber value;
    SignedNumber modulus;

    // Reduces value into [0, modulus); modulus must be >= 1.
    ResidueClass(SignedNumber v, SignedNumber m);

    bool operator==(const ResidueClass&) const = default;
};

// A p-adic order: a natural number, or infinite (the order of zero).
class ExtendedOrder {
  public:
    explicit ExtendedOrder(unsigned long v) : infinite_(false), value_(v) {}
    static ExtendedOrder infinite() { return ExtendedOrder(); }

    bool is_infinite() const { return infinite_; }
    unsigned long finite_value() const;

    // true when the order is >= bound; infinite passes every bound.
    bool at_least(const SignedNumber& bound) const;

    bool operator==(const ExtendedOrder&) const = default;

  private:
    ExtendedOrder() : infinite_(true), value_(0) {}
    bool infinite_;
    unsigned long value_;
};

// A prime power p^a with cached modulus and totient phi(p^a) = p^(a-1)(p-1).
class PrimePower {
  public:
    // Throws PreconditionError if p is not prime or a < 1.
    explicit PrimePower(unsigned long p, unsigned a = 1);

    unsigned long prime() const { return p_; }
    unsigned exponent() const { return a_; }
    const SignedNumber& modulus() const { return modulus_; }      // p^a
    const SignedNumber& submodulus() const { return submodulus_; } // p^(a-1)
    const SignedNumber& totient() const { return totient_; }       // phi(p^a)

  private:
    unsigned long p_;
    unsigned a_;
    SignedNumber modulus_;
    SignedNumber submodulus_;
    SignedNumber totient_;
};

// (-p)^e for e >= 0.
SignedNumber neg_p_pow(unsigned long p, unsigned long e);

// Floor and ceiling of num/den for den > 0 and any sign of num.
SignedNumber floor_div(const SignedNumber& num, const SignedNumber& den);
SignedNumber ceil_div(const SignedNumber& num, const SignedNumber& den);

// Least nonnegative residue as a plain integer.
SignedNumber mod_reduce(const SignedNumber& a, const SignedNumber& m);

SignedNumber pow_mod(const SignedNumber& base, const SignedNumber& exp, const SignedNumber& m);

SignedNumber factorial(unsigned long n);

std::string to_decimal(const SignedNumber& x);

} // namespace flecklab
