#include "flecklab/fleck_sums.hpp"

#include <atomic>

namespace flecklab {

namespace {

std::atomic<unsigned long> g_max_sum_n{1000000};

void check_sum_length(unsigned long n) {
    if (n > g_max_sum_n.load(std::memory_order_relaxed)) {
        throw ResourceLimitError("alternating_sum: n = " + std::to_string(n) +
                                 " exceeds the configured bound " +
                                 std::to_string(g_max_sum_n.load(std::memory_order_relaxed)));
    }
}

// Divides C by (-p)^e (or multiplies when e < 0) and applies the bracket
// term. Exactness of the division is a theorem; its failure is fatal.
FleckValue normalize_quotient(unsigned long p, const SignedNumber& raw, SignedNumber floor_exp,
                              int bracket) {
    FleckValue out;
    out.raw_sum = raw;
    out.floor_exponent = floor_exp;
    out.bracket_correction = bracket;
    if (floor_exp >= 0) {
        const SignedNumber d = neg_p_pow(p, floor_exp.get_ui());
        if (!mpz_divisible_p(raw.get_mpz_t(), d.get_mpz_t())) {
            throw IntegralityError("fleck quotient: " + to_decimal(raw) +
                                   " is not divisible by " + to_decimal(d));
        }
        SignedNumber q;
        mpz_divexact(q.get_mpz_t(), raw.get_mpz_t(), d.get_mpz_t());
        out.value = q + bracket;
    } else {
        const SignedNumber f = neg_p_pow(p, SignedNumber(-floor_exp).get_ui());
        out.value = f * raw + bracket;
    }
    return out;
}

} // namespace

unsigned long max_sum_n() {
    return g_max_sum_n.load(std::memory_order_relaxed);
}

void set_max_sum_n(unsigned long limit) {
    g_max_sum_n.store(limit, std::memory_order_relaxed);
}

SignedNumber alternating_sum(const SignedNumber& m, unsigned long n, const SignedNumber& r) {
    if (m < 1) {
        throw PreconditionError("alternating_sum: modulus must be >= 1");
    }
    check_sum_length(n);
    const SignedNumber r0z = mod_reduce(r, m);
    if (r0z > n) {
        return 0;
    }
    const unsigned long r0 = r0z.get_ui();
    // Walk k = r0, r0+m, ... keeping binom(n,k) updated one step at a time.
    SignedNumber b;
    mpz_bin_uiui(b.get_mpz_t(), n, r0);
    SignedNumber sum = (r0 % 2 == 0) ? b : SignedNumber(-b);
    if (!m.fits_ulong_p()) {
        return sum; // stride larger than n: single term
    }
    const unsigned long step = m.get_ui();
    unsigned long k = r0;
    while (k + step <= n) {
        for (unsigned long j = 0; j < step; ++j) {
            mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(), n - k);
            ++k;
            mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k);
        }
        if (k % 2 == 0) {
            sum += b;
        } else {
            sum -= b;
        }
    }
    return sum;
}

std::vector<SignedNumber> alternating_sum_row(unsigned long m, unsigned long n) {
    if (m < 1) {
        throw PreconditionError("alternating_sum_row: modulus must be >= 1");
    }
    check_sum_length(n);
    std::vector<SignedNumber> row(m, SignedNumber(0));
    SignedNumber b = 1;
    for (unsigned long k = 0;; ++k) {
        if (k % 2 == 0) {
            row[k % m] += b;
        } else {
            row[k % m] -= b;
        }
        if (k == n) {
            break;
        }
        mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(), n - k);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
    }
    return row;
}

SignedNumber fleck_floor(unsigned long p, unsigned long n) {
    return floor_div(SignedNumber(n) - 1, SignedNumber(p) - 1);
}

SignedNumber weisman_floor(const PrimePower& pp, unsigned long n) {
    return floor_div(SignedNumber(n) - pp.submodulus(), pp.totient());
}

FleckValue generalized_fleck(const PrimePower& pp, unsigned long n, const SignedNumber& r) {
    const SignedNumber raw = alternating_sum(pp.modulus(), n, r);
    const int bracket = SignedNumber(n) < pp.submodulus() ? 1 : 0;
    return normalize_quotient(pp.prime(), raw, weisman_floor(pp, n), bracket);
}

FleckValue fleck_quotient(unsigned long p, unsigned long n, const SignedNumber& r) {
    return generalized_fleck(PrimePower(p), n, r);
}

std::vector<FleckValue> generalized_fleck_row(const PrimePower& pp, unsigned long n) {
    if (!pp.modulus().fits_ulong_p()) {
        throw ResourceLimitError("generalized_fleck_row: modulus beyond desk scale");
    }
    const unsigned long m = pp.modulus().get_ui();
    const auto sums = alternating_sum_row(m, n);
    const SignedNumber floor_exp = weisman_floor(pp, n);
    const int bracket = SignedNumber(n) < pp.submodulus() ? 1 : 0;
    std::vector<FleckValue> row;
    row.reserve(m);
    for (const auto& c : sums) {
        row.push_back(normalize_quotient(pp.prime(), c, floor_exp, bracket));
    }
    return row;
}

std::vector<FleckValue> fleck_quotient_row(unsigned long p, unsigned long n) {
    return generalized_fleck_row(PrimePower(p), n);
}

ResidueClass recurrence_mod_p(unsigned long p, unsigned long n, const SignedNumber& r,
                              std::span<const unsigned long> lower_mod_p) {
    if (n < p) {
        throw PreconditionError("recurrence_mod_p: requires n >= p");
    }
    if (lower_mod_p.size() != p) {
        throw PreconditionError("recurrence_mod_p: need one residue per class mod p");
    }
    const SignedNumber pz(p);
    const unsigned long r0 = mod_reduce(r, pz).get_ui();
    // inner[j] = sum_{i=0..j-1} F(n-p+1, r-i) mod p, accumulated as j grows
    unsigned long acc = 0;
    unsigned long inner = 0;
    for (unsigned long j = 1; j < p; ++j) {
        const unsigned long cls = (r0 + p - ((j - 1) % p)) % p;
        inner = (inner + lower_mod_p[cls]) % p;
        const unsigned long inv_j =
            pow_mod(SignedNumber(j), SignedNumber(p - 2), pz).get_ui();
        acc = (acc + inv_j * inner) % p;
    }
    return ResidueClass(SignedNumber(p - acc), pz);
}

} // namespace flecklab
