#include <doctest.h>

#include "flecklab/exact_arith.hpp"
#include "flecklab/fleck_sums.hpp"
#include "oracles.hpp"

using namespace flecklab;

namespace {

// restores the global sum bound when a test tightens it
struct SumLimitGuard {
    unsigned long saved = max_sum_n();
    ~SumLimitGuard() { set_max_sum_n(saved); }
};

} // namespace

TEST_CASE("alternating sums match the naive oracle") {
    CHECK(alternating_sum(3, 4, 0) == -3);
    CHECK(alternating_sum(3, 4, 0) == oracle::naive_alternating_sum(3, 4, 0));
    CHECK(alternating_sum(7, 21, 1) == 149205);
    CHECK(alternating_sum(7, 21, 1) == oracle::naive_alternating_sum(7, 21, 1));
    for (unsigned long m = 1; m <= 9; ++m) {
        for (unsigned long n = 0; n <= 40; ++n) {
            for (long r = -2; r < static_cast<long>(m); ++r) {
                CHECK(alternating_sum(m, n, r) == oracle::naive_alternating_sum(m, n, r));
            }
        }
    }
}

TEST_CASE("row evaluation agrees with per-class evaluation") {
    for (unsigned long m : {2ul, 3ul, 5ul, 8ul}) {
        for (unsigned long n : {0ul, 1ul, 7ul, 30ul, 121ul}) {
            const auto row = alternating_sum_row(m, n);
            REQUIRE(row.size() == m);
            for (unsigned long r = 0; r < m; ++r) {
                CHECK(row[r] == alternating_sum(m, n, r));
            }
        }
    }
}

TEST_CASE("a modulus beyond machine range leaves at most one summand") {
    const SignedNumber huge("99999999999999999999999999");
    CHECK(alternating_sum(huge, 5, 3) == -10);
    CHECK(alternating_sum(huge, 5, 0) == 1);
    CHECK(alternating_sum(huge, 5, 7) == 0);
    CHECK(alternating_sum(huge, 5, -1) == 0); // residue of -1 is huge-1 > 5
}

TEST_CASE("modulus one collapses the row") {
    for (unsigned long n = 1; n <= 30; ++n) {
        CHECK(alternating_sum(1, n, 0) == 0);
        CHECK(alternating_sum(1, n, 7) == 0);
    }
    CHECK(alternating_sum(1, 0, 0) == 1);
}

TEST_CASE("sum depends on r only through r mod m") {
    for (unsigned long m : {3ul, 5ul, 7ul}) {
        for (unsigned long n : {4ul, 17ul, 52ul}) {
            for (long r = 0; r < static_cast<long>(m); ++r) {
                const auto base = alternating_sum(m, n, r);
                CHECK(alternating_sum(m, n, r + static_cast<long>(m)) == base);
                CHECK(alternating_sum(m, n, r - 3 * static_cast<long>(m)) == base);
            }
        }
    }
}

TEST_CASE("Pascal-style recurrence of the sums") {
    for (unsigned long m = 1; m <= 12; ++m) {
        auto row_n = alternating_sum_row(m, 0);
        for (unsigned long n = 0; n <= 300; ++n) {
            const auto row_next = alternating_sum_row(m, n + 1);
            for (unsigned long r = 0; r < m; ++r) {
                const unsigned long r_prev = (r + m - 1) % m;
                CHECK(row_next[r] == row_n[r] - row_n[r_prev]);
            }
            row_n = row_next;
        }
    }
}

TEST_CASE("row sums telescope to the delta at n = 0") {
    for (unsigned long m : {2ul, 3ul, 7ul, 10ul}) {
        SignedNumber total = 0;
        for (const auto& v : alternating_sum_row(m, 0)) {
            total += v;
        }
        CHECK(total == 1);
        for (unsigned long n : {1ul, 2ul, 25ul, 80ul}) {
            total = 0;
            for (const auto& v : alternating_sum_row(m, n)) {
                total += v;
            }
            CHECK(total == 0);
        }
    }
}

TEST_CASE("resource limit is enforced and configurable") {
    SumLimitGuard guard;
    set_max_sum_n(100);
    CHECK_THROWS_AS(alternating_sum(3, 101, 0), ResourceLimitError);
    CHECK_THROWS_AS(fleck_quotient(3, 101, 0), ResourceLimitError);
    CHECK(alternating_sum(3, 100, 0) == oracle::naive_alternating_sum(3, 100, 0));
}

TEST_CASE("valuation floors") {
    CHECK(fleck_floor(3, 4) == 1);
    CHECK(fleck_floor(5, 13) == 3);
    for (unsigned long p : {2ul, 3ul, 5ul, 13ul}) {
        CHECK(fleck_floor(p, 0) == -1);
    }
    CHECK(weisman_floor(PrimePower(2, 2), 4) == 1);
    CHECK(weisman_floor(PrimePower(2, 2), 5) == 1);
    CHECK(weisman_floor(PrimePower(3, 2), 0) == -1);
    // a = 1 reduces to the simple floor
    for (unsigned long p : {2ul, 3ul, 7ul}) {
        for (unsigned long n = 0; n <= 60; ++n) {
            CHECK(weisman_floor(PrimePower(p), n) == fleck_floor(p, n));
        }
    }
}

TEST_CASE("Fleck quotient: worked instances") {
    const auto f340 = fleck_quotient(3, 4, 0);
    CHECK(f340.value == 1);
    CHECK(f340.raw_sum == -3);
    CHECK(f340.floor_exponent == 1);
    CHECK(f340.bracket_correction == 0);

    const auto f5130 = fleck_quotient(5, 13, 0);
    CHECK(f5130.value == 8);
    CHECK(f5130.raw_sum == -1000);
    CHECK(f5130.floor_exponent == 3);
    CHECK(mod_reduce(f5130.value, 5) == 3);
}

TEST_CASE("Fleck quotient at n = 0 is forced by the bracket") {
    for (unsigned long p : {2ul, 3ul, 7ul}) {
        CHECK(fleck_quotient(p, 0, 1).value == 1);
        CHECK(fleck_quotient(p, 0, 0).value == 1 - long(p));
        if (p > 2) {
            CHECK(fleck_quotient(p, 0, 2).value == 1);
        }
        CHECK(fleck_quotient(p, 0, SignedNumber(p)).value == 1 - long(p));
    }
}

TEST_CASE("generalized quotient: worked instances") {
    const auto f = generalized_fleck(PrimePower(2, 2), 4, 0);
    CHECK(f.value == -1);
    CHECK(f.raw_sum == 2);
    CHECK(f.floor_exponent == 1);

    const auto g = generalized_fleck(PrimePower(2, 2), 5, 1);
    CHECK(g.value == 3);
    CHECK(g.raw_sum == -6);
    CHECK(g.floor_exponent == 1);

    const auto h = generalized_fleck(PrimePower(3, 2), 0, 0);
    CHECK(h.value == -2);
    CHECK(h.bracket_correction == 1);
    CHECK(h.floor_exponent == -1);
    CHECK(mod_reduce(h.value, 3) == 1);
}

TEST_CASE("below the submodulus every quotient is 1 mod p") {
    for (const auto& pp : {PrimePower(2, 3), PrimePower(3, 2), PrimePower(5, 2)}) {
        const unsigned long sub = pp.submodulus().get_ui();
        for (unsigned long n = 0; n < sub; ++n) {
            for (unsigned long r = 0; r < pp.modulus().get_ui(); ++r) {
                CHECK(mod_reduce(generalized_fleck(pp, n, r).value, pp.prime()) == 1);
            }
        }
    }
}

TEST_CASE("generalized quotient reduces to the Fleck quotient at a = 1") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const PrimePower pp(p, 1);
        for (unsigned long n = 0; n <= 40; ++n) {
            for (unsigned long r = 0; r < p; ++r) {
                CHECK(generalized_fleck(pp, n, r) == fleck_quotient(p, n, r));
            }
        }
    }
}

TEST_CASE("FleckValue invariant ties value, raw sum and floor together") {
    for (const auto& pp : {PrimePower(2, 2), PrimePower(3, 2), PrimePower(5, 1)}) {
        for (unsigned long n = 0; n <= 60; ++n) {
            const auto row = generalized_fleck_row(pp, n);
            for (const auto& f : row) {
                if (f.floor_exponent >= 0) {
                    const SignedNumber scale = neg_p_pow(pp.prime(), f.floor_exponent.get_ui());
                    CHECK(f.raw_sum == scale * (f.value - f.bracket_correction));
                } else {
                    const SignedNumber scale =
                        neg_p_pow(pp.prime(), SignedNumber(-f.floor_exponent).get_ui());
                    CHECK(f.value == scale * f.raw_sum + f.bracket_correction);
                }
            }
        }
    }
}

TEST_CASE("Fleck and Weisman valuation bounds") {
    for (unsigned long p : primes_in_range(2, 13)) {
        for (unsigned long n = 0; n <= 400; ++n) {
            const auto row = alternating_sum_row(p, n);
            const SignedNumber bound = fleck_floor(p, n);
            for (const auto& c : row) {
                CHECK(p_adic_order(c, p).at_least(bound));
            }
        }
    }
    for (const auto& pp :
         {PrimePower(2, 2), PrimePower(2, 3), PrimePower(3, 2), PrimePower(3, 3),
          PrimePower(5, 2)}) {
        for (unsigned long n = pp.submodulus().get_ui(); n <= 150; ++n) {
            const auto row = alternating_sum_row(pp.modulus().get_ui(), n);
            const SignedNumber bound = weisman_floor(pp, n);
            for (const auto& c : row) {
                CHECK(p_adic_order(c, pp.prime()).at_least(bound));
            }
            // integrality: the normalized quotient exists
            CHECK_NOTHROW(generalized_fleck_row(pp, n));
        }
    }
}

TEST_CASE("row recurrence mod p: worked instances") {
    // n = 4, p = 3: direct value F_3(4,2) = -2, so 1 mod 3
    {
        const auto lower_row = fleck_quotient_row(3, 2);
        std::vector<unsigned long> lower;
        for (const auto& f : lower_row) {
            lower.push_back(mod_reduce(f.value, 3).get_ui());
        }
        const auto got = recurrence_mod_p(3, 4, 2, lower);
        CHECK(got.value == 1);
        CHECK(got.value == mod_reduce(fleck_quotient(3, 4, 2).value, 3));
    }
    // n = 5, p = 3 from the row at n = 3
    {
        const auto lower_row = fleck_quotient_row(3, 3);
        std::vector<unsigned long> lower;
        for (const auto& f : lower_row) {
            lower.push_back(mod_reduce(f.value, 3).get_ui());
        }
        CHECK(recurrence_mod_p(3, 5, 0, lower).value ==
              mod_reduce(fleck_quotient(3, 5, 0).value, 3));
        CHECK(mod_reduce(fleck_quotient(3, 5, 0).value, 3) == 2);
    }
    // p = 2: F_2(2,0) = -1, recurrence gives 1 mod 2
    {
        const auto lower_row = fleck_quotient_row(2, 1);
        std::vector<unsigned long> lower;
        for (const auto& f : lower_row) {
            lower.push_back(mod_reduce(f.value, 2).get_ui());
        }
        CHECK(recurrence_mod_p(2, 2, 0, lower).value == 1);
        CHECK(fleck_quotient(2, 2, 0).value == -1);
    }
}

TEST_CASE("row recurrence agrees with direct evaluation (unit-scale sweep)") {
    for (unsigned long p : primes_in_range(2, 11)) {
        for (unsigned long n = p; n <= 60; ++n) {
            std::vector<unsigned long> lower;
            for (const auto& f : fleck_quotient_row(p, n - p + 1)) {
                lower.push_back(mod_reduce(f.value, p).get_ui());
            }
            const auto direct = fleck_quotient_row(p, n);
            for (unsigned long r = 0; r < p; ++r) {
                CHECK(recurrence_mod_p(p, n, r, lower).value ==
                      mod_reduce(direct[r].value, p));
            }
        }
    }
}

TEST_CASE("row recurrence preconditions") {
    std::vector<unsigned long> lower{1, 1, 1};
    CHECK_THROWS_AS(recurrence_mod_p(3, 2, 0, lower), PreconditionError);
    std::vector<unsigned long> short_row{1, 1};
    CHECK_THROWS_AS(recurrence_mod_p(3, 4, 0, short_row), PreconditionError);
}
