#include "flecklab/class_field.hpp"

#include <numeric>
#include <set>

#include "flecklab/exact_arith.hpp"
#include "flecklab/special_sequences.hpp"

namespace flecklab {

namespace {

void require_prime(unsigned long p, const char* who) {
    if (!is_prime(SignedNumber(p))) {
        throw PreconditionError(std::string(who) + ": " + std::to_string(p) + " is not prime");
    }
}

long isqrt_long(long x) {
    SignedNumber r;
    mpz_sqrt(r.get_mpz_t(), SignedNumber(x).get_mpz_t());
    return r.get_si();
}

// Indefinite form of positive discriminant D is reduced iff
// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, all compared
// exactly through squares.
bool indefinite_reduced(long a, long b, long D) {
    if (b <= 0 || b * b >= D) {
        return false;
    }
    const long twoa = 2 * std::labs(a);
    if ((twoa + b) * (twoa + b) <= D) {
        return false;
    }
    if (twoa > b && (twoa - b) * (twoa - b) >= D) {
        return false;
    }
    return true;
}

// Reduction step: (a,b,c) -> (c, b', (b'^2 - D)/(4c)) with b' = -b mod 2|c|
// landing in (sqrt(D) - 2|c|, sqrt(D)]. Permutes the reduced forms; its
// orbits are the form cycles.
std::array<long, 3> rho(const std::array<long, 3>& f, long D, long sqrtD) {
    const long c = f[2];
    const long twoc = 2 * std::labs(c);
    long t = (-f[1]) % twoc;
    if (t < 0) {
        t += twoc;
    }
    long bprime = sqrtD - (sqrtD - t) % twoc;
    if (bprime > sqrtD) {
        bprime -= twoc; // t > sqrtD case
    }
    const long cprime = (bprime * bprime - D) / (4 * c);
    return {c, bprime, cprime};
}

} // namespace

ImaginaryClassData class_number_imaginary(unsigned long p) {
    require_prime(p, "class_number_imaginary");
    if (p % 4 != 3) {
        throw PreconditionError("class_number_imaginary: requires p = 3 (mod 4)");
    }
    ImaginaryClassData out;
    out.p = p;
    const long pl = static_cast<long>(p);
    for (long a = 1; 3 * a * a <= pl; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b + pl) % (4 * a) != 0) {
                continue;
            }
            const long c = (b * b + pl) / (4 * a);
            if (c < a) {
                continue;
            }
            if ((std::labs(b) == a || a == c) && b < 0) {
                continue;
            }
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) {
                continue;
            }
            out.forms.push_back({a, b, c});
        }
    }
    out.h_minus_p = out.forms.size();
    return out;
}

RealClassData real_class_and_unit(unsigned long p) {
    require_prime(p, "real_class_and_unit");
    if (p % 4 != 1) {
        throw PreconditionError("real_class_and_unit: requires p = 1 (mod 4)");
    }
    RealClassData out;
    out.p = p;

    if (p < 17) {
        // ascending search; only p = 5, 13 land here
        for (SignedNumber u = 1;; ++u) {
            const SignedNumber pu2 = SignedNumber(p) * u * u;
            bool found = false;
            for (int sign : {-1, +1}) {
                const SignedNumber cand = pu2 + 4 * sign;
                if (cand > 0 && mpz_perfect_square_p(cand.get_mpz_t())) {
                    out.u = u;
                    mpz_sqrt(out.v.get_mpz_t(), cand.get_mpz_t());
                    found = true;
                    break;
                }
            }
            if (found) {
                break;
            }
        }
    } else {
        // For 4 < sqrt(p), every solution of v^2 - p u^2 = +-4 or +-1 has
        // v/u among the convergents of sqrt(p), and convergent values
        // increase strictly, so the earliest hit is the minimal unit
        // (doubled when it solves the +-1 equation). Units grow far too
        // fast for the ascending search at desk-scale primes.
        const long a0 = isqrt_long(static_cast<long>(p));
        long m = 0, d = 1, a = a0;
        SignedNumber h_prev = 1, h = a0;
        SignedNumber k_prev = 0, k = 1;
        for (;;) {
            const SignedNumber norm = h * h - SignedNumber(p) * k * k;
            if (norm == 4 || norm == -4) {
                out.u = k;
                out.v = h;
                break;
            }
            if (norm == 1 || norm == -1) {
                out.u = 2 * k;
                out.v = 2 * h;
                break;
            }
            m = d * a - m;
            d = (static_cast<long>(p) - m * m) / d;
            a = (a0 + m) / d;
            SignedNumber h_next = a * h + h_prev;
            SignedNumber k_next = a * k + k_prev;
            h_prev = std::move(h);
            h = std::move(h_next);
            k_prev = std::move(k);
            k = std::move(k_next);
        }
    }

    // h(p): cycles of reduced indefinite forms of discriminant p
    const long D = static_cast<long>(p);
    const long sqrtD = isqrt_long(D);
    std::set<std::array<long, 3>> reduced;
    for (long b = 1; b <= sqrtD; b += 2) {
        const long num = b * b - D; // negative
        for (long abs_a = 1; 2 * abs_a <= sqrtD + b; ++abs_a) {
            if (num % (4 * abs_a) != 0) {
                continue;
            }
            for (long a : {abs_a, -abs_a}) {
                if (!indefinite_reduced(a, b, D)) {
                    continue;
                }
                reduced.insert({a, b, num / (4 * a)});
            }
        }
    }
    std::set<std::array<long, 3>> seen;
    unsigned long cycles = 0;
    for (const auto& start : reduced) {
        if (seen.count(start)) {
            continue;
        }
        ++cycles;
        auto f = start;
        do {
            seen.insert(f);
            f = rho(f, D, sqrtD);
            if (!reduced.count(f)) {
                throw Error("real_class_and_unit: reduction left the reduced set");
            }
        } while (f != start);
    }
    out.h_p = cycles;
    return out;
}

ResidueClass half_factorial_mod_p(unsigned long p) {
    require_prime(p, "half_factorial_mod_p");
    if (p == 2) {
        throw PreconditionError("half_factorial_mod_p: requires odd p");
    }
    const SignedNumber pz(p);
    SignedNumber acc = 1;
    for (unsigned long k = 2; k <= (p - 1) / 2; ++k) {
        acc = mod_reduce(acc * k, pz);
    }
    return ResidueClass(acc, pz);
}

RegularityReport regularity(unsigned long p) {
    require_prime(p, "regularity");
    if (p <= 3) {
        throw PreconditionError("regularity: requires p > 3");
    }
    const SignedNumber pz(p);
    RegularityReport out{p, true, {}, ResidueClass(1, pz)};
    SignedNumber product = 1;
    // B_{2j} for j = 1..(p-3)/2 drives both the numerator scan and the
    // relative-class-number product -B_{2j}/(4j)
    for (unsigned long n = 2; n + 3 <= p; n += 2) {
        const ExactFraction b = bernoulli_number(n);
        if (mpz_divisible_p(SignedNumber(b.get_num()).get_mpz_t(), pz.get_mpz_t())) {
            out.offending_indices.push_back(n);
        }
        const ExactFraction factor = -b / ExactFraction(2 * n);
        product = mod_reduce(product * rational_mod_p(factor, pz).value, pz);
    }
    out.is_regular = out.offending_indices.empty();
    out.h_minus_mod_p = ResidueClass(product, pz);
    return out;
}

} // namespace flecklab
