#include "flecklab/closed_forms.hpp"

#include "flecklab/exact_arith.hpp"
#include "flecklab/special_sequences.hpp"

namespace flecklab {

namespace {

unsigned long residue_ui(const SignedNumber& a, unsigned long m) {
    return mod_reduce(a, SignedNumber(m)).get_ui();
}

SignedNumber pow_int(const SignedNumber& base, unsigned long e) {
    SignedNumber r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// sum_k binom(n0,k)(-1)^k (k-r)^n1, the shared kernel of the LE branches.
SignedNumber difference_power_sum(unsigned long n0, unsigned long n1, const SignedNumber& r) {
    SignedNumber sum = 0;
    for (unsigned long k = 0; k <= n0; ++k) {
        SignedNumber term =
            binomial(SignedNumber(n0), SignedNumber(k)) * pow_int(SignedNumber(k) - r, n1);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

// sum over k with p not dividing k-r of binom(n0,k)(-1)^k (k-r)^n1 q_p(k-r);
// the excluded summands are defined to contribute 0.
SignedNumber difference_power_sum_fermat(unsigned long p, unsigned long n0, unsigned long n1,
                                         const SignedNumber& r) {
    const SignedNumber pz(p);
    SignedNumber sum = 0;
    for (unsigned long k = 0; k <= n0; ++k) {
        const SignedNumber base = SignedNumber(k) - r;
        if (mpz_divisible_p(base.get_mpz_t(), pz.get_mpz_t())) {
            continue;
        }
        SignedNumber term = binomial(SignedNumber(n0), SignedNumber(k)) * pow_int(base, n1) *
                            fermat_quotient(base, pz);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

ExactFraction signed_unit(unsigned long parity) {
    return parity % 2 == 0 ? ExactFraction(1) : ExactFraction(-1);
}

} // namespace

std::pair<ResidueClass, BranchTag> thm11_eval(unsigned long p, unsigned long n,
                                              const SignedNumber& r_raw) {
    const SignedNumber pz(p);
    // with r reduced, a dropped summand in the Fermat-quotient branch has
    // base k - r = 0 and is genuinely zero; unreduced r would not be safe
    const SignedNumber r = mod_reduce(r_raw, pz);
    const unsigned long n0 = n % p;
    const unsigned long n1 = (p == 2) ? 0 : residue_ui(SignedNumber(n0) - SignedNumber(n), p - 1);
    BranchTag tag{Thm11Branch::LE, n0, n1};

    if (n0 <= n1) {
        tag.which = Thm11Branch::LE;
        const ExactFraction value = signed_unit(n1) *
                                    ExactFraction(difference_power_sum(n0, n1, r)) /
                                    ExactFraction(factorial(n1));
        return {rational_mod_p(value, pz), tag};
    }
    if (n1 == 0) {
        tag.which = Thm11Branch::GT_ZERO;
        const unsigned long rbar = residue_ui(r, p);
        const SignedNumber value =
            (rbar % 2 == 0 ? 1 : -1) * binomial(SignedNumber(n0), SignedNumber(rbar));
        return {ResidueClass(value, pz), tag};
    }
    tag.which = Thm11Branch::GT_POS;
    const ExactFraction value = signed_unit(n1 - 1) *
                                ExactFraction(difference_power_sum_fermat(p, n0, n1, r)) /
                                ExactFraction(factorial(n1 - 1));
    return {rational_mod_p(value, pz), tag};
}

ExactFraction thm12_rhs_stirling_shift(unsigned long nstar, unsigned long m,
                                       const SignedNumber& r) {
    ExactFraction acc(0);
    ExactFraction rpow(1); // (-r)^k
    for (unsigned long k = 0; k <= nstar; ++k) {
        acc += stirling2_bar(nstar - k + m, m) * rpow / ExactFraction(factorial(k));
        rpow *= ExactFraction(-r);
    }
    return acc;
}

ExactFraction thm12_rhs_stirling_binom(unsigned long nstar, unsigned long m,
                                       const SignedNumber& r) {
    ExactFraction acc(0);
    for (unsigned long k = 0; k <= nstar; ++k) {
        acc += stirling2_bar(m + nstar, m + k) * ExactFraction(binomial(-r, SignedNumber(k)));
    }
    return acc;
}

ExactFraction thm12_rhs_power_sum(unsigned long nstar, unsigned long m, const SignedNumber& r) {
    ExactFraction acc(0);
    for (unsigned long k = 0; k <= m; ++k) {
        const ExactFraction term =
            ExactFraction(binomial(SignedNumber(m), SignedNumber(k)) *
                          pow_int(SignedNumber(k) - r, m + nstar));
        acc += signed_unit(m - k) * term;
    }
    return acc / ExactFraction(factorial(m + nstar));
}

namespace {

ResidueClass thm12_nonnegative(unsigned long p, unsigned long n, unsigned long nstar,
                               const SignedNumber& r, unsigned long m) {
    const ExactFraction sum = thm12_rhs_stirling_binom(nstar, m, r);
    return rational_mod_p(signed_unit(n) * sum, SignedNumber(p));
}

ResidueClass thm12_nonpositive(unsigned long p, unsigned long nstar, const SignedNumber& r,
                               unsigned long order) {
    const ExactFraction value = signed_unit(nstar) *
                                higher_bernoulli_poly_eval(nstar, order, ExactFraction(-r)) /
                                ExactFraction(factorial(nstar));
    return rational_mod_p(value, SignedNumber(p));
}

} // namespace

ResidueClass thm12_eval(unsigned long p, unsigned long n, const SignedNumber& r,
                        const SignedNumber& m) {
    if (mod_reduce(m - SignedNumber(n), SignedNumber(p)) != 0) {
        throw PreconditionError("thm12_eval: m must be congruent to n mod p");
    }
    if (!m.fits_slong_p()) {
        throw ResourceLimitError("thm12_eval: shift " + to_decimal(m) + " is beyond desk scale");
    }
    const unsigned long nstar = (p == 2) ? 0 : residue_ui(-SignedNumber(n), p - 1);
    if (m > 0) {
        return thm12_nonnegative(p, n, nstar, r, m.get_ui());
    }
    if (m < 0) {
        return thm12_nonpositive(p, nstar, r, SignedNumber(-m).get_ui());
    }
    // both routes are valid at m = 0 and must coincide
    const ResidueClass a = thm12_nonnegative(p, n, nstar, r, 0);
    const ResidueClass b = thm12_nonpositive(p, nstar, r, 0);
    if (a != b) {
        throw Error("thm12_eval: the two m = 0 routes disagree");
    }
    return a;
}

ResidueClass cor11_eval(unsigned long p, unsigned long n, const SignedNumber& r) {
    const unsigned long nstar = (p == 2) ? 0 : residue_ui(-SignedNumber(n), p - 1);
    const ExactFraction value =
        ExactFraction(pow_int(r, nstar)) / ExactFraction(factorial(nstar));
    return rational_mod_p(value, SignedNumber(p));
}

ResidueClass cor12_eval(unsigned long p, unsigned long n0, unsigned long n1,
                        const SignedNumber& r_raw) {
    if (n0 + 1 > p || n1 + 2 > p) {
        throw PreconditionError("cor12_eval: requires n0 <= p-1 and n1 <= p-2");
    }
    const SignedNumber pz(p);
    const SignedNumber r = mod_reduce(r_raw, pz); // see thm11_eval
    if (n0 <= n1) {
        const ExactFraction sum = signed_unit(n0) *
                                  ExactFraction(difference_power_sum(n0, n1, r));
        return rational_mod_p(sum / falling_factorial(ExactFraction(n1), n0), pz);
    }
    if (n1 == 0) {
        const unsigned long rbar = residue_ui(r, p);
        const ExactFraction value = signed_unit(rbar + 1) *
                                    ExactFraction(binomial(SignedNumber(n0), SignedNumber(rbar))) /
                                    ExactFraction(factorial(n0));
        return rational_mod_p(value, pz);
    }
    const ExactFraction value =
        signed_unit(n1) * ExactFraction(difference_power_sum_fermat(p, n0, n1, r)) /
        ExactFraction(factorial(n0 - n1) * factorial(n1 - 1));
    return rational_mod_p(value, pz);
}

ResidueClass cor14_eval(unsigned long p, unsigned long n, const SignedNumber& r, Cor14Mode mode) {
    const SignedNumber pz(p);
    const unsigned long nstar = (p == 2) ? 0 : residue_ui(-SignedNumber(n), p - 1);
    if (mode == Cor14Mode::ZeroColumn) {
        return rational_mod_p(signed_unit(n) * stirling2_bar(nstar + n % p, n % p), pz);
    }
    const PolynomialExact b = bernoulli_poly(nstar);
    const ExactFraction value =
        signed_unit(n) * b.eval(ExactFraction(-r)) / ExactFraction(factorial(nstar));
    return rational_mod_p(value, pz);
}

ResidueClass cor16_eval(unsigned long p, unsigned long n, const SignedNumber& r) {
    if (p == 2 || n < 3 || n > p) {
        throw PreconditionError("cor16_eval: requires odd p and 3 <= n <= p");
    }
    const ExactFraction neg_r(-r);
    const ExactFraction value =
        ExactFraction(-factorial(n)) *
        (bernoulli_poly(p - n + 1).eval(neg_r) / ExactFraction(n - 1) +
         ExactFraction(r + 1) * bernoulli_poly(p - n).eval(neg_r) / ExactFraction(n));
    return rational_mod_p(value, SignedNumber(p));
}

unsigned long thm14_column_length(const PrimePower& pp, unsigned long n) {
    const SignedNumber d =
        mod_reduce(pp.submodulus() - 1 - SignedNumber(n), pp.totient());
    return d.get_ui();
}

ResidueClass thm14_expand_r(const PrimePower& pp, unsigned long n, const SignedNumber& r,
                            std::span<const unsigned long> zero_column) {
    if (SignedNumber(n) < pp.submodulus()) {
        throw PreconditionError("thm14_expand_r: requires n >= p^(a-1)");
    }
    const unsigned long d = thm14_column_length(pp, n);
    if (zero_column.size() != d + 1) {
        throw PreconditionError("thm14_expand_r: zero column must have length d+1 = " +
                                std::to_string(d + 1));
    }
    const SignedNumber pz(pp.prime());
    SignedNumber acc = 0;
    for (unsigned long k = 0; k <= d; ++k) {
        acc += mod_reduce(binomial(r + SignedNumber(k) - 1, SignedNumber(k)), pz) *
               zero_column[k];
    }
    return ResidueClass(acc, pz);
}

} // namespace flecklab
