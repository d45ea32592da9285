#include "flecklab/numbers.hpp"

namespace flecklab {

ExactFraction make_fraction(const SignedNumber& numerator, const SignedNumber& denominator) {
    if (denominator == 0) {
        throw PreconditionError("make_fraction: zero denominator");
    }
    ExactFraction q(numerator, denominator);
    q.canonicalize();
    return q;
}

bool is_prime(const SignedNumber& n) {
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (mpz_even_p(n.get_mpz_t())) {
        return false;
    }
    SignedNumber d = 3;
    while (d * d <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
        d += 2;
    }
    return true;
}

std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi) {
    std::vector<unsigned long> out;
    for (unsigned long p = lo < 2 ? 2 : lo; p <= hi; ++p) {
        if (is_prime(SignedNumber(p))) {
            out.push_back(p);
        }
    }
    return out;
}

ResidueClass::ResidueClass(SignedNumber v, SignedNumber m)
    : value(std::move(v)), modulus(std::move(m)) {
    if (modulus < 1) {
        throw PreconditionError("ResidueClass: modulus must be >= 1");
    }
    mpz_mod(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

unsigned long ExtendedOrder::finite_value() const {
    if (infinite_) {
        throw PreconditionError("ExtendedOrder: infinite order has no finite value");
    }
    return value_;
}

bool ExtendedOrder::at_least(const SignedNumber& bound) const {
    if (infinite_) {
        return true;
    }
    return SignedNumber(value_) >= bound;
}

PrimePower::PrimePower(unsigned long p, unsigned a) : p_(p), a_(a) {
    if (a < 1) {
        throw PreconditionError("PrimePower: exponent must be >= 1");
    }
    if (!is_prime(SignedNumber(p))) {
        throw PreconditionError("PrimePower: " + std::to_string(p) + " is not prime");
    }
    mpz_ui_pow_ui(submodulus_.get_mpz_t(), p_, a_ - 1);
    modulus_ = submodulus_ * p_;
    totient_ = submodulus_ * (p_ - 1);
}

SignedNumber neg_p_pow(unsigned long p, unsigned long e) {
    SignedNumber r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    if (e % 2 == 1) {
        r = -r;
    }
    return r;
}

SignedNumber floor_div(const SignedNumber& num, const SignedNumber& den) {
    if (den <= 0) {
        throw PreconditionError("floor_div: denominator must be positive");
    }
    SignedNumber q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

SignedNumber ceil_div(const SignedNumber& num, const SignedNumber& den) {
    if (den <= 0) {
        throw PreconditionError("ceil_div: denominator must be positive");
    }
    SignedNumber q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

SignedNumber mod_reduce(const SignedNumber& a, const SignedNumber& m) {
    if (m < 1) {
        throw PreconditionError("mod_reduce: modulus must be >= 1");
    }
    SignedNumber r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

SignedNumber pow_mod(const SignedNumber& base, const SignedNumber& exp, const SignedNumber& m) {
    if (exp < 0) {
        throw PreconditionError("pow_mod: negative exponent");
    }
    SignedNumber r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

SignedNumber factorial(unsigned long n) {
    SignedNumber r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string to_decimal(const SignedNumber& x) {
    return x.get_str(10);
}

} // namespace flecklab
