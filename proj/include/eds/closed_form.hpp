#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "eds/spec.hpp"

namespace eds {

// Exponent of one factor: (coeff * n^2 - offset[n mod modulus]) / divisor.
struct FactorRule {
    Poly poly;
    long coeff;
    long divisor;
    long modulus;
    std::vector<long> offsets;  // indexed by n % modulus; unused slots hold 0
};

// One rank's general term: h_n = sign[n mod sign_modulus] * prod factor^exponent.
struct ClosedFormTable {
    int rank;
    int sign_modulus;
    std::vector<int> sign;  // +1 / -1, and 0 exactly at multiples of the rank
    std::vector<FactorRule> factors;
};

const ClosedFormTable& closed_form_table(int rank);

long factor_exponent(const FactorRule& rule, unsigned long n);  // throws NonIntegralExponent

Int closed_term(const EdsSpec& spec, unsigned long n);

// Sign and exponent vector over the irreducible basis (the rank-12 composite
// factor is split into -alpha * (2alpha-1) * (3alpha^2-3alpha+1), the minus
// sign folded into `sign`).
struct TermFactorization {
    int sign;  // +1, -1, or 0 for the zero terms
    std::map<Poly, unsigned long> exponents;

    Int value(const Int& alpha) const;
};

TermFactorization term_factorization(const EdsSpec& spec, unsigned long n);

// The factorization shape depends on the rank and index only, not on alpha.
TermFactorization term_shape(int rank, unsigned long n);

struct VerifyReport {
    bool ok = true;
    unsigned long first_mismatch = 0;
    Int expected;  // recurrence value
    Int got;       // closed-form value
};

// Closed form against the recurrence for every n <= max_n.
VerifyReport verify_closed_form(const EdsSpec& spec, unsigned long max_n);

// CSV: rank,factor,residue,coeff,offset,divisor
void dump_closed_form_csv(std::ostream& out);

}  // namespace eds
