#include "eds/spec.hpp"

namespace eds {

const char* poly_label(Poly p) {
    switch (p) {
        case Poly::Alpha: return "alpha";
        case Poly::AlphaPlus1: return "alpha+1";
        case Poly::AlphaMinus1: return "alpha-1";
        case Poly::TwoAlphaMinus1: return "2alpha-1";
        case Poly::Gamma: return "alpha^2-alpha+1";
        case Poly::Delta: return "-alpha^2+3alpha-1";
        case Poly::G3: return "3alpha^2-3alpha+1";
        case Poly::Theta: return "2alpha-2alpha^2-1";
        case Poly::Lambda: return "lambda";
    }
    return "?";
}

Int poly_eval(Poly p, const Int& a) {
    switch (p) {
        case Poly::Alpha: return a;
        case Poly::AlphaPlus1: return a + 1;
        case Poly::AlphaMinus1: return a - 1;
        case Poly::TwoAlphaMinus1: return 2 * a - 1;
        case Poly::Gamma: return a * a - a + 1;
        case Poly::Delta: return -a * a + 3 * a - 1;
        case Poly::G3: return 3 * a * a - 3 * a + 1;
        case Poly::Theta: return 2 * a - 2 * a * a - 1;
        case Poly::Lambda: return (3 * a * a - 3 * a + 1) * (a - 2 * a * a);
    }
    throw Error("bad poly");
}

bool rank_supported(int rank) {
    return (rank >= 2 && rank <= 10) || rank == 12;
}

bool alpha_admissible(int rank, const Int& alpha) {
    switch (rank) {
        case 2:
        case 3:
        case 4:
        case 5: return alpha != 0;
        case 6: return alpha != 0 && alpha != -1;
        case 7:
        case 8:
        case 9:
        case 10:
        case 12: return alpha != 0 && alpha != 1;
        default: return false;
    }
}

EdsSpec::EdsSpec(int rank_, Int alpha_) : rank(rank_), alpha(std::move(alpha_)) {
    if (!rank_supported(rank)) throw UnsupportedRank("rank must be 2..10 or 12, got " + std::to_string(rank));
    if (!alpha_admissible(rank, alpha))
        throw InvalidAlpha("parameter " + alpha.get_str() + " is excluded for rank " + std::to_string(rank));
}

const std::vector<Poly>& factor_basis(int rank) {
    static const std::vector<Poly> b2 = {Poly::Alpha};
    static const std::vector<Poly> b4 = {Poly::Alpha};
    static const std::vector<Poly> b6 = {Poly::Alpha, Poly::AlphaPlus1};
    static const std::vector<Poly> b7 = {Poly::Alpha, Poly::AlphaMinus1};
    static const std::vector<Poly> b8 = {Poly::Alpha, Poly::AlphaMinus1, Poly::TwoAlphaMinus1};
    static const std::vector<Poly> b9 = {Poly::Alpha, Poly::AlphaMinus1, Poly::Gamma};
    static const std::vector<Poly> b10 = {Poly::Alpha, Poly::AlphaMinus1, Poly::TwoAlphaMinus1, Poly::Delta};
    static const std::vector<Poly> b12 = {Poly::Alpha, Poly::AlphaMinus1, Poly::TwoAlphaMinus1, Poly::G3,
                                          Poly::Theta};
    switch (rank) {
        case 2:
        case 3:
        case 4:
        case 5: return b4;
        case 6: return b6;
        case 7: return b7;
        case 8: return b8;
        case 9: return b9;
        case 10: return b10;
        case 12: return b12;
    }
    throw UnsupportedRank("no factor basis for rank " + std::to_string(rank));
}

Int basis_product(const EdsSpec& spec) {
    Int prod = 1;
    for (Poly p : factor_basis(spec.rank)) prod *= poly_eval(p, spec.alpha);
    return prod;
}

}  // namespace eds
