#include "flecklab/special_sequences.hpp"

#include <atomic>
#include <limits>
#include <map>

#include "flecklab/exact_arith.hpp"

namespace flecklab {

namespace {

const ExactFraction kZero(0);
const ExactFraction kOne(1);

// Truncated product of two series (coefficient vectors), degree <= deg.
std::vector<ExactFraction> series_mul(const std::vector<ExactFraction>& a,
                                      const std::vector<ExactFraction>& b, unsigned long deg) {
    std::vector<ExactFraction> out(deg + 1, kZero);
    for (unsigned long i = 0; i < a.size() && i <= deg; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (unsigned long j = 0; j < b.size() && i + j <= deg; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<ExactFraction> series_pow(std::vector<ExactFraction> base, unsigned long m,
                                      unsigned long deg) {
    std::vector<ExactFraction> acc(deg + 1, kZero);
    acc[0] = kOne;
    while (m > 0) {
        if (m & 1) {
            acc = series_mul(acc, base, deg);
        }
        m >>= 1;
        if (m > 0) {
            base = series_mul(base, base, deg);
        }
    }
    return acc;
}

// Coefficients of x/(e^x - 1), i.e. B_k / k!, up to degree deg.
std::vector<ExactFraction> bernoulli_series(unsigned long deg) {
    std::vector<ExactFraction> s(deg + 1);
    for (unsigned long k = 0; k <= deg; ++k) {
        s[k] = bernoulli_number(k) / ExactFraction(factorial(k));
    }
    return s;
}

// Cached coefficient vectors of (x/(e^x - 1))^m.
std::mutex g_higher_mutex;
std::map<unsigned long, std::vector<ExactFraction>> g_higher_series;

std::vector<ExactFraction> higher_series(unsigned long m, unsigned long deg) {
    std::scoped_lock lock(g_higher_mutex);
    auto it = g_higher_series.find(m);
    if (it != g_higher_series.end() && it->second.size() > deg) {
        return it->second;
    }
    auto s = series_pow(bernoulli_series(deg), m, deg);
    g_higher_series[m] = s;
    return s;
}

} // namespace

void PolynomialExact::trim() {
    while (!coefficients.empty() && coefficients.back() == 0) {
        coefficients.pop_back();
    }
}

long PolynomialExact::degree() const {
    return static_cast<long>(coefficients.size()) - 1;
}

ExactFraction PolynomialExact::coefficient(unsigned long k) const {
    return k < coefficients.size() ? coefficients[k] : kZero;
}

ExactFraction PolynomialExact::eval(const ExactFraction& t) const {
    ExactFraction acc(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

ExactFraction falling_factorial(const ExactFraction& x, unsigned long k) {
    ExactFraction acc(1);
    for (unsigned long i = 0; i < k; ++i) {
        acc *= x - ExactFraction(i);
    }
    return acc;
}

SignedNumber stirling2(unsigned long n, unsigned long k) {
    if (k > n) {
        return 0;
    }
    SignedNumber sum = 0;
    for (unsigned long j = 0; j <= k; ++j) {
        SignedNumber term;
        mpz_ui_pow_ui(term.get_mpz_t(), j, n);
        term *= binomial(SignedNumber(k), SignedNumber(j));
        if ((k - j) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const SignedNumber kfac = factorial(k);
    if (!mpz_divisible_p(sum.get_mpz_t(), kfac.get_mpz_t())) {
        throw IntegralityError("stirling2: alternating sum not divisible by k!");
    }
    SignedNumber out;
    mpz_divexact(out.get_mpz_t(), sum.get_mpz_t(), kfac.get_mpz_t());
    return out;
}

ExactFraction stirling2_bar(unsigned long n, unsigned long k) {
    if (k > n) {
        return kZero;
    }
    return make_fraction(factorial(k) * stirling2(n, k), factorial(n));
}

SignedNumber stirling1_unsigned(unsigned long m, unsigned long k) {
    if (k > m) {
        return 0;
    }
    // s(i+1, j) = s(i, j-1) + i * s(i, j), one row at a time
    std::vector<SignedNumber> row(m + 1, SignedNumber(0));
    row[0] = 1;
    for (unsigned long i = 0; i < m; ++i) {
        for (unsigned long j = i + 1; j > 0; --j) {
            row[j] = row[j - 1] + row[j] * i;
        }
        row[0] = 0;
    }
    return row[k];
}

ExactFraction BernoulliCache::get(unsigned long n) {
    std::scoped_lock lock(mutex_);
    if (n > ceiling_) {
        throw ResourceLimitError("bernoulli_number: index " + std::to_string(n) +
                                 " exceeds the cache ceiling " + std::to_string(ceiling_));
    }
    if (computed_.empty()) {
        computed_.push_back(kOne);
        computed_.push_back(make_fraction(-1, 2));
    }
    while (computed_.size() <= n) {
        const unsigned long l = computed_.size();
        ExactFraction acc(0);
        for (unsigned long k = 0; k < l; ++k) {
            acc += ExactFraction(binomial(SignedNumber(l + 1), SignedNumber(k))) * computed_[k];
        }
        computed_.push_back(-acc / ExactFraction(l + 1));
    }
    return computed_[n];
}

namespace {

std::atomic<unsigned long> g_bernoulli_ceiling{512};

BernoulliCache& shared_bernoulli_cache() {
    static BernoulliCache cache(std::numeric_limits<unsigned long>::max());
    return cache;
}

} // namespace

ExactFraction bernoulli_number(unsigned long n) {
    if (n > g_bernoulli_ceiling.load(std::memory_order_relaxed)) {
        throw ResourceLimitError("bernoulli_number: index " + std::to_string(n) +
                                 " exceeds the configured ceiling " +
                                 std::to_string(g_bernoulli_ceiling.load(std::memory_order_relaxed)));
    }
    return shared_bernoulli_cache().get(n);
}

unsigned long bernoulli_ceiling() {
    return g_bernoulli_ceiling.load(std::memory_order_relaxed);
}

void set_bernoulli_ceiling(unsigned long ceiling) {
    g_bernoulli_ceiling.store(ceiling, std::memory_order_relaxed);
}

PolynomialExact bernoulli_poly(unsigned long n) {
    PolynomialExact poly;
    poly.coefficients.assign(n + 1, kZero);
    for (unsigned long k = 0; k <= n; ++k) {
        poly.coefficients[n - k] =
            ExactFraction(binomial(SignedNumber(n), SignedNumber(k))) * bernoulli_number(k);
    }
    poly.trim();
    return poly;
}

ExactFraction higher_bernoulli_number(unsigned long n, unsigned long m) {
    const auto series = higher_series(m, n);
    return series[n] * ExactFraction(factorial(n));
}

ExactFraction higher_bernoulli_poly_eval(unsigned long n, unsigned long m,
                                         const ExactFraction& t) {
    const auto series = higher_series(m, n);
    ExactFraction acc(0);
    ExactFraction tpow(1);
    // sum_k binom(n,k) B_k^{(m)} t^(n-k), assembled from low powers of t up
    for (unsigned long j = 0; j <= n; ++j) {
        const unsigned long k = n - j;
        acc += ExactFraction(binomial(SignedNumber(n), SignedNumber(k))) * series[k] *
               ExactFraction(factorial(k)) * tpow;
        tpow *= t;
    }
    return acc;
}

ResidueClass higher_bernoulli_mod_p(unsigned long n, unsigned long m, const SignedNumber& t,
                                    unsigned long p) {
    if (n + 2 > p) {
        throw PreconditionError("higher_bernoulli_mod_p: requires n <= p-2");
    }
    return rational_mod_p(higher_bernoulli_poly_eval(n, m, ExactFraction(t)), SignedNumber(p));
}

} // namespace flecklab
