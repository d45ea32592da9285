#include "flecklab/exact_arith.hpp"

namespace flecklab {

SignedNumber binomial(const SignedNumber& n, const SignedNumber& k) {
    if (k < 0) {
        return 0;
    }
    if (!k.fits_ulong_p()) {
        throw ResourceLimitError("binomial: lower argument " + to_decimal(k) +
                                 " is beyond desk scale");
    }
    SignedNumber r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

ResidueClass least_residue(const SignedNumber& a, const SignedNumber& m) {
    if (m < 1) {
        throw PreconditionError("least_residue: modulus must be >= 1");
    }
    return ResidueClass(a, m);
}

ExtendedOrder p_adic_order(const SignedNumber& x, const SignedNumber& p) {
    if (!is_prime(p)) {
        throw PreconditionError("p_adic_order: " + to_decimal(p) + " is not prime");
    }
    if (x == 0) {
        return ExtendedOrder::infinite();
    }
    SignedNumber reduced;
    auto count = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return ExtendedOrder(static_cast<unsigned long>(count));
}

int legendre(const SignedNumber& a, const SignedNumber& p) {
    if (p < 3 || !is_prime(p)) {
        throw PreconditionError("legendre: modulus must be an odd prime");
    }
    SignedNumber e = (p - 1) / 2;
    SignedNumber r = pow_mod(a, e, p);
    if (r == 0) {
        return 0;
    }
    return r == 1 ? 1 : -1;
}

SignedNumber fermat_quotient(const SignedNumber& a, const SignedNumber& p) {
    if (!is_prime(p)) {
        throw PreconditionError("fermat_quotient: " + to_decimal(p) + " is not prime");
    }
    if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        throw NonUnitError("fermat_quotient: argument divisible by " + to_decimal(p));
    }
    if (!p.fits_ulong_p()) {
        throw ResourceLimitError("fermat_quotient: prime beyond desk scale");
    }
    SignedNumber power;
    mpz_pow_ui(power.get_mpz_t(), a.get_mpz_t(), p.get_ui() - 1);
    power -= 1;
    SignedNumber q;
    mpz_divexact(q.get_mpz_t(), power.get_mpz_t(), p.get_mpz_t());
    return q;
}

ResidueClass rational_mod(const ExactFraction& x, const SignedNumber& m) {
    if (m < 1) {
        throw PreconditionError("rational_mod: modulus must be >= 1");
    }
    const SignedNumber den(x.get_den());
    SignedNumber inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NonUnitDenominatorError("rational_mod: denominator " + to_decimal(den) +
                                      " is not a unit mod " + to_decimal(m));
    }
    return ResidueClass(SignedNumber(x.get_num()) * inv, m);
}

ResidueClass rational_mod_p(const ExactFraction& x, const SignedNumber& p) {
    if (!is_prime(p)) {
        throw PreconditionError("rational_mod_p: " + to_decimal(p) + " is not prime");
    }
    return rational_mod(x, p);
}

} // namespace flecklab
