#pragma once

#include <string>
#include <vector>

#include "eds/numbers.hpp"

namespace eds {

// Polynomials in alpha that appear as factors of sequence terms.
enum class Poly {
    Alpha,           // alpha (for ranks 2 and 3: the raw curve coefficient)
    AlphaPlus1,      // alpha+1
    AlphaMinus1,     // alpha-1
    TwoAlphaMinus1,  // 2alpha-1
    Gamma,           // alpha^2-alpha+1
    Delta,           // -alpha^2+3alpha-1
    G3,              // 3alpha^2-3alpha+1
    Theta,           // 2alpha-2alpha^2-1
    Lambda,          // -alpha*(2alpha-1)*(3alpha^2-3alpha+1), reducible
};

const char* poly_label(Poly p);
Int poly_eval(Poly p, const Int& alpha);

// One member of a zero-term sequence family: rank N in {2,...,10,12} and the
// integer parameter. For N = 2 the parameter is the coefficient b of
// y^2 = x^3 + ax^2 + bx; for N = 3 it is a3 of y^2 + a1*xy + a3*y = x^3.
struct EdsSpec {
    int rank;
    Int alpha;

    EdsSpec(int rank_, Int alpha_);  // throws UnsupportedRank / InvalidAlpha
};

bool rank_supported(int rank);
// Excluded parameter values: N in {4,5}: 0; N = 6: {-1,0}; N >= 7: {0,1};
// N in {2,3}: 0.
bool alpha_admissible(int rank, const Int& alpha);

// Irreducible factor basis of the general term (lambda already split up).
const std::vector<Poly>& factor_basis(int rank);

// Product of all evaluated basis factors; a prime divides some term h_1..h_{N-1}
// exactly when it divides this.
Int basis_product(const EdsSpec& spec);

}  // namespace eds
