#pragma once

// Exact class numbers of Q(sqrt(-p)) and Q(sqrt(p)), fundamental units,
// the half-factorial congruences of Mordell and Chowla, and regular-prime
// testing through Bernoulli numerators. Everything is integer arithmetic;
// no analytic class number formula is used anywhere.

#include <array>
#include <vector>

#include "flecklab/numbers.hpp"

namespace flecklab {

// Reduced primitive positive form (a, b, c) of discriminant b^2 - 4ac = -p.
using QuadraticForm = std::array<long, 3>;

struct ImaginaryClassData {
    unsigned long p = 0;
    unsigned long h_minus_p = 0; // h(-p)
    std::vector<QuadraticForm> forms;
};

struct RealClassData {
    unsigned long p = 0;
    unsigned long h_p = 0; // h(p)
    SignedNumber u;
    SignedNumber v; // fundamental unit (v + u sqrt(p))/2, v^2 - p u^2 = +-4
};

struct RegularityReport {
    unsigned long p = 0;
    bool is_regular = false;
    std::vector<unsigned long> offending_indices; // even n <= p-3 with p | num(B_n)
    ResidueClass h_minus_mod_p;                   // prod (-B_{2n}/(4n)) mod p
};

// h(-p) by exhaustive enumeration of reduced forms with a <= sqrt(p/3).
// Requires p prime with p = 3 (mod 4).
ImaginaryClassData class_number_imaginary(unsigned long p);

// Minimal solution of v^2 - p u^2 = +-4 (ascending u, -4 tried first) and
// h(p) as the number of cycles of reduced indefinite forms of
// discriminant p. Requires p prime with p = 1 (mod 4).
RealClassData real_class_and_unit(unsigned long p);

// ((p-1)/2)! mod p by direct product; odd prime p.
ResidueClass half_factorial_mod_p(unsigned long p);

// Scans the Bernoulli numerators B_2, ..., B_{p-3} for divisibility by p
// and evaluates the product congruent to the relative class number mod p.
// Requires p prime, p > 3.
RegularityReport regularity(unsigned long p);

} // namespace flecklab
