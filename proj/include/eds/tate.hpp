#pragma once

#include "eds/numbers.hpp"
#include "eds/sequence.hpp"
#include "eds/spec.hpp"

namespace eds {

// y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6, exact rationals throughout.
struct CurveCoefficients {
    Rat a1, a2, a3, a4, a6;

    bool integral() const;
    Rat discriminant() const;
};

// The one-parameter model with torsion point (0,0) of order N, as
// (b, c) |-> a1 = 1-c, a2 = a3 = -b, a4 = a6 = 0. Requires N >= 4.
CurveCoefficients tate_normal_form(const EdsSpec& spec);

// Rescale (x, y) -> (u^2 x, u^3 y) to clear denominators for N in {8, 10, 12}
// (identity elsewhere). The scales are fixed per rank so that the curve seeds
// the canonical integer sequence of its family.
CurveCoefficients integerize(const EdsSpec& spec, const CurveCoefficients& curve);

// h2 = a3, h3 = a2 a3^2 - a4^2 - a1 a3 a4, h4 = 2 a3 a4 h3 + a1 a3^2 h3 - a3^5.
// The curve must be integral.
InitialValues initial_values_from_curve(const CurveCoefficients& curve);

// Closed seed values per rank, as polynomials in the parameter. For N >= 4
// this equals initial_values_from_curve(integerize(tate_normal_form(spec))).
InitialValues initial_values(const EdsSpec& spec);

}  // namespace eds
