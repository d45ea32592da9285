#pragma once

// Exact Stirling numbers of both kinds, falling factorials, Bernoulli
// numbers and polynomials, and higher-order Bernoulli polynomials.
// Bernoulli data is memoized behind locks; queries are pure given the
// caches, so concurrent readers are fine.

#include <mutex>
#include <vector>

#include "flecklab/numbers.hpp"

namespace flecklab {

// Polynomial with exact rational coefficients, ascending by degree.
// The leading coefficient is nonzero unless the polynomial is zero.
struct PolynomialExact {
    std::vector<ExactFraction> coefficients;

    void trim();
    long degree() const; // -1 for the zero polynomial
    ExactFraction coefficient(unsigned long k) const;
    ExactFraction eval(const ExactFraction& t) const;

    bool operator==(const PolynomialExact&) const = default;
};

// (x)_0 = 1, (x)_k = x(x-1)...(x-k+1).
ExactFraction falling_factorial(const ExactFraction& x, unsigned long k);

// Stirling number of the second kind via the explicit alternating formula
// (1/k!) sum_j binom(k,j)(-1)^(k-j) j^n, with the division checked exact.
SignedNumber stirling2(unsigned long n, unsigned long k);

// Normalized variant S-bar(n,k) = k! S(n,k) / n!.
ExactFraction stirling2_bar(unsigned long n, unsigned long k);

// Unsigned Stirling number of the first kind: the nonnegative s(m,k) with
// (x)_m = sum_k (-1)^(m-k) s(m,k) x^k.
SignedNumber stirling1_unsigned(unsigned long m, unsigned long k);

// Growable memo of B_0, B_1, ... computed from the defining recurrence
// sum_{k=0..l} binom(l+1,k) B_k = 0, capped by a configurable ceiling.
// Single writer, any readers.
class BernoulliCache {
  public:
    explicit BernoulliCache(unsigned long ceiling = 512) : ceiling_(ceiling) {}

    // Throws ResourceLimitError above the ceiling.
    ExactFraction get(unsigned long n);

    unsigned long ceiling() const { return ceiling_; }

  private:
    unsigned long ceiling_;
    std::mutex mutex_;
    std::vector<ExactFraction> computed_;
};

// B_n from the process-wide cache. The default ceiling of 512 covers
// regularity work for p <= 509; raise it before asking for more.
ExactFraction bernoulli_number(unsigned long n);
unsigned long bernoulli_ceiling();
void set_bernoulli_ceiling(unsigned long ceiling);

// B_n(t) as an exact polynomial.
PolynomialExact bernoulli_poly(unsigned long n);

// m-th order Bernoulli number B_n^{(m)}: n! times the x^n coefficient of
// (x/(e^x-1))^m, computed by truncated power-series exponentiation.
ExactFraction higher_bernoulli_number(unsigned long n, unsigned long m);

// B_n^{(m)}(t) = sum_k binom(n,k) B_k^{(m)} t^(n-k).
ExactFraction higher_bernoulli_poly_eval(unsigned long n, unsigned long m,
                                         const ExactFraction& t);

// B_n^{(m)}(t) reduced mod p; requires n <= p-2 so the value is p-integral.
ResidueClass higher_bernoulli_mod_p(unsigned long n, unsigned long m, const SignedNumber& t,
                                    unsigned long p);

} // namespace flecklab
