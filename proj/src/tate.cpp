#include "eds/tate.hpp"

namespace eds {

bool CurveCoefficients::integral() const {
    return a1.get_den() == 1 && a2.get_den() == 1 && a3.get_den() == 1 && a4.get_den() == 1 &&
           a6.get_den() == 1;
}

Rat CurveCoefficients::discriminant() const {
    Rat b2 = a1 * a1 + 4 * a2;
    Rat b4 = 2 * a4 + a1 * a3;
    Rat b6 = a3 * a3 + 4 * a6;
    Rat b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

CurveCoefficients tate_normal_form(const EdsSpec& spec) {
    const Rat a(spec.alpha);
    Rat b, c;
    switch (spec.rank) {
        case 4: b = a; c = 0; break;
        case 5: b = a; c = a; break;
        case 6: b = a + a * a; c = a; break;
        case 7: b = a * a * a - a * a; c = a * a - a; break;
        case 8: b = (2 * a - 1) * (a - 1); c = b / a; break;
        case 9: c = a * a * (a - 1); b = c * (a * (a - 1) + 1); break;
        case 10: {
            Rat den = a - (a - 1) * (a - 1);
            if (den == 0) throw InvalidAlpha("degenerate parametrization for rank 10");
            c = (2 * a * a * a - 3 * a * a + a) / den;
            b = c * a * a / den;
            break;
        }
        case 12: {
            Rat den = (a - 1) * (a - 1) * (a - 1);
            c = (3 * a * a - 3 * a + 1) * (a - 2 * a * a) / den;
            b = c * (-2 * a * a + 2 * a - 1) / (a - 1);
            break;
        }
        default:
            throw UnsupportedRank("no Tate normal form for rank " + std::to_string(spec.rank));
    }
    CurveCoefficients curve{Rat(1) - c, -b, -b, Rat(0), Rat(0)};
    if (curve.discriminant() == 0) throw SingularCurve("singular curve for this parameter");
    return curve;
}

CurveCoefficients integerize(const EdsSpec& spec, const CurveCoefficients& curve) {
    const Int& a = spec.alpha;
    Int u;  // a_i picks up u^i
    switch (spec.rank) {
        case 8: u = a; break;
        case 10: {
            Int d = -a * a + 3 * a - 1;
            u = d * d;
            break;
        }
        case 12: {
            Int d = a - 1;
            u = d * d * d * d;
            break;
        }
        default: return curve;  // already integral
    }
    CurveCoefficients out{curve.a1 * u, curve.a2 * u * u, curve.a3 * u * u * u,
                          curve.a4 * u * u * u * u, curve.a6 * u * u * u * u * u * u};
    if (!out.integral()) throw NonIntegerResult("integerization left a fractional coefficient");
    return out;
}

InitialValues initial_values_from_curve(const CurveCoefficients& curve) {
    if (!curve.integral()) throw NonIntegerResult("initial values need an integral model");
    Int a1 = curve.a1.get_num(), a2 = curve.a2.get_num(), a3 = curve.a3.get_num(),
        a4 = curve.a4.get_num();
    Int h2 = a3;
    Int h3 = a2 * a3 * a3 - a4 * a4 - a1 * a3 * a4;
    Int h4 = 2 * a3 * a4 * h3 + a1 * a3 * a3 * h3 - a3 * a3 * a3 * a3 * a3;
    return InitialValues{h2, h3, h4};
}

InitialValues initial_values(const EdsSpec& spec) {
    const Int& a = spec.alpha;
    switch (spec.rank) {
        case 2:  // parameter is b of y^2 = x^3 + ax^2 + bx
            return InitialValues{Int(0), -a * a, Int(0)};
        case 3:  // parameter is a3 of y^2 + a1*xy + a3*y = x^3
            return InitialValues{a, Int(0), -pow_int(a, 5)};
        case 4: return InitialValues{-a, -pow_int(a, 3), Int(0)};
        case 5: return InitialValues{-a, -pow_int(a, 3), pow_int(a, 6)};
        case 6: {
            Int b = a + 1;
            return InitialValues{-a * b, -pow_int(a, 3) * pow_int(b, 3), pow_int(a, 6) * pow_int(b, 5)};
        }
        case 7: {
            Int b = a - 1;
            return InitialValues{-a * a * b, -pow_int(a, 6) * pow_int(b, 3),
                                 pow_int(a, 11) * pow_int(b, 6)};
        }
        case 8: {
            Int xi = (a - 1) * (2 * a - 1);
            return InitialValues{-pow_int(a, 3) * xi, -pow_int(a, 8) * pow_int(xi, 3),
                                 pow_int(a, 14) * pow_int(xi, 6)};
        }
        case 9: {
            Int g = poly_eval(Poly::Gamma, a);
            Int b = a - 1;
            return InitialValues{-a * a * b * g, -pow_int(a, 6) * pow_int(b, 3) * pow_int(g, 3),
                                 pow_int(a, 12) * pow_int(b, 6) * pow_int(g, 5)};
        }
        case 10: {
            Int z = (2 * a - 1) * (a - 1);  // the degree-2 product
            Int d = poly_eval(Poly::Delta, a);
            return InitialValues{-pow_int(a, 3) * z * pow_int(d, 4),
                                 -pow_int(a, 9) * pow_int(z, 3) * pow_int(d, 10),
                                 pow_int(a, 16) * pow_int(z, 6) * pow_int(d, 19)};
        }
        case 12: {
            Int b = a - 1;
            Int lam = poly_eval(Poly::Lambda, a);
            Int th = poly_eval(Poly::Theta, a);
            return InitialValues{-pow_int(b, 8) * lam * th, -pow_int(b, 20) * pow_int(lam, 3) * pow_int(th, 3),
                                 pow_int(b, 37) * pow_int(lam, 6) * pow_int(th, 5)};
        }
        default: throw UnsupportedRank("rank " + std::to_string(spec.rank));
    }
}

}  // namespace eds
