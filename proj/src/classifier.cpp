#include "eds/classifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eds/closed_form.hpp"

namespace eds {

int classifier_modulus(int rank, Power power) {
    if (!(rank >= 4 && rank_supported(rank))) throw UnsupportedRank("classification covers ranks 4..10, 12");
    if (power == Power::Square) return 2 * rank;
    return rank == 4 ? 8 : 3 * rank;
}

namespace {

struct Key {
    int sign;  // squares only; cubes store +1
    std::vector<std::pair<Poly, int>> prod;

    bool operator<(const Key& o) const { return std::tie(sign, prod) < std::tie(o.sign, o.prod); }
};

struct Outcome {
    PowerVerdict::Kind kind;
    const char* id;  // nullptr when not Conditional
};

// Surviving signed products and what is known about their solvability.
const std::map<Key, Outcome>& square_knowledge() {
    using K = PowerVerdict::Kind;
    constexpr Poly A = Poly::Alpha, A1 = Poly::AlphaPlus1, B = Poly::AlphaMinus1,
                   T2 = Poly::TwoAlphaMinus1, GM = Poly::Gamma, DL = Poly::Delta, G3 = Poly::G3,
                   TH = Poly::Theta;
    static const std::map<Key, Outcome> m = {
        {{1, {}}, {K::Always, nullptr}},
        {{-1, {}}, {K::Never, nullptr}},
        {{1, {{A, 1}}}, {K::Conditional, "alpha-sq"}},
        {{-1, {{A, 1}}}, {K::Conditional, "neg-alpha-sq"}},
        {{1, {{A1, 1}}}, {K::Conditional, "alpha+1-sq"}},
        {{-1, {{A1, 1}}}, {K::Conditional, "neg-alpha+1-sq"}},
        {{1, {{B, 1}}}, {K::Conditional, "alpha-1-sq"}},
        {{-1, {{B, 1}}}, {K::Conditional, "one-alpha-sq"}},
        {{1, {{A, 1}, {A1, 1}}}, {K::Never, "eq1"}},
        {{-1, {{A, 1}, {A1, 1}}}, {K::Never, "eq1"}},
        {{1, {{A, 1}, {B, 1}}}, {K::Never, "eq5"}},
        {{-1, {{A, 1}, {B, 1}}}, {K::Never, "eq5"}},
        {{1, {{A, 1}, {T2, 1}}}, {K::Conditional, "eq8"}},
        {{-1, {{A, 1}, {T2, 1}}}, {K::Never, "eq8-neg"}},
        {{1, {{B, 1}, {T2, 1}}}, {K::Conditional, "eq7"}},
        {{-1, {{B, 1}, {T2, 1}}}, {K::Never, "eq7-neg"}},
        {{1, {{A, 1}, {B, 1}, {T2, 1}}}, {K::Never, "eq9"}},
        {{-1, {{A, 1}, {B, 1}, {T2, 1}}}, {K::Never, "eq9"}},
        {{1, {{B, 1}, {GM, 1}}}, {K::Never, "eq12"}},
        {{-1, {{B, 1}, {GM, 1}}}, {K::Never, "eq12"}},
        {{1, {{GM, 1}}}, {K::Never, "eq13"}},
        {{-1, {{GM, 1}}}, {K::Never, "eq13-neg"}},
        {{1, {{A, 1}, {GM, 1}}}, {K::Never, nullptr}},
        {{-1, {{A, 1}, {GM, 1}}}, {K::Never, nullptr}},
        {{1, {{DL, 1}}}, {K::Conditional, "eq22"}},
        {{-1, {{DL, 1}}}, {K::Conditional, "eq22-neg"}},
        {{1, {{T2, 1}, {DL, 1}}}, {K::Never, "eq23"}},
        {{-1, {{T2, 1}, {DL, 1}}}, {K::Never, "eq23"}},
        {{1, {{G3, 1}}}, {K::Conditional, "eq32"}},
        {{-1, {{G3, 1}}}, {K::Never, "eq32-neg"}},
        {{1, {{B, 1}, {TH, 1}}}, {K::Conditional, "eq34"}},
        {{-1, {{B, 1}, {TH, 1}}}, {K::Never, "eq34-neg"}},
        {{1, {{A, 1}, {T2, 1}, {G3, 1}, {TH, 1}}}, {K::Never, "eq33"}},
        {{-1, {{A, 1}, {T2, 1}, {G3, 1}, {TH, 1}}}, {K::Never, "eq33"}},
        {{1, {{A, 1}, {T2, 1}, {G3, 1}}}, {K::Never, "eq35"}},
        {{-1, {{A, 1}, {T2, 1}, {G3, 1}}}, {K::Never, "eq35"}},
        {{1, {{A, 1}, {B, 1}, {G3, 1}}}, {K::Never, "eq36"}},
        {{-1, {{A, 1}, {B, 1}, {G3, 1}}}, {K::Never, "eq36"}},
        {{1, {{B, 1}, {T2, 1}, {TH, 1}}}, {K::Never, "eq37"}},
        {{-1, {{B, 1}, {T2, 1}, {TH, 1}}}, {K::Never, "eq37"}},
    };
    return m;
}

Outcome cube_outcome(const std::vector<std::pair<Poly, int>>& prod) {
    using K = PowerVerdict::Kind;
    if (prod.empty()) return {K::Always, nullptr};
    if (prod.size() == 1) {
        switch (prod[0].first) {
            case Poly::Alpha: return {K::Conditional, "alpha-cube"};
            case Poly::AlphaPlus1: return {K::Conditional, "alpha+1-cube"};
            case Poly::AlphaMinus1: return {K::Conditional, "alpha-1-cube"};
            case Poly::TwoAlphaMinus1: return {K::Conditional, "2alpha-1-cube"};
            case Poly::Gamma: return {K::Conditional, "eq14"};
            case Poly::Delta: return {K::Conditional, "eq24"};
            default: return {K::Never, nullptr};
        }
    }
    // the one multi-factor conjunction with an admissible solution (alpha = 2)
    if (prod.size() == 2 && prod[0] == std::pair<Poly, int>{Poly::AlphaMinus1, 1} &&
        prod[1] == std::pair<Poly, int>{Poly::Delta, 2})
        return {K::Conditional, "eq28"};
    // every other conjunction of coprime factors forces consecutive or
    // classical cube pairs and has no admissible solution
    return {K::Never, nullptr};
}

std::string product_note(int sign, const std::vector<std::pair<Poly, int>>& prod) {
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (prod.empty()) os << "1";
    for (std::size_t i = 0; i < prod.size(); ++i) {
        if (i) os << "*";
        os << "(" << poly_label(prod[i].first) << ")";
        if (prod[i].second != 1) os << "^" << prod[i].second;
    }
    return os.str();
}

PowerVerdict classify_impl(int rank, int residue, Power power) {
    int mod = classifier_modulus(rank, power);
    residue = ((residue % mod) + mod) % mod;
    if (residue % rank == 0) return {PowerVerdict::Kind::ZeroTerm, power, mod, std::nullopt, "zero term"};

    TermFactorization shape = term_shape(rank, static_cast<unsigned long>(residue));
    int red = power == Power::Square ? 2 : 3;
    std::vector<std::pair<Poly, int>> prod;
    for (const auto& [poly, e] : shape.exponents)
        if (e % static_cast<unsigned long>(red) != 0)
            prod.emplace_back(poly, power == Power::Square ? 1 : static_cast<int>(e % 3));
    std::sort(prod.begin(), prod.end());

    Outcome out{};
    int sign = 1;
    if (power == Power::Square) {
        sign = shape.sign;
        auto it = square_knowledge().find(Key{sign, prod});
        if (it == square_knowledge().end())
            throw Error("unresolved square product for rank " + std::to_string(rank) + " residue " +
                        std::to_string(residue));
        out = it->second;
    } else {
        out = cube_outcome(prod);
    }
    PowerVerdict v{out.kind, power, mod, std::nullopt, product_note(sign, prod)};
    if (out.kind == PowerVerdict::Kind::Conditional) v.condition_id = out.id;
    return v;
}

struct TranscribedGroup {
    PowerVerdict::Kind kind;
    const char* id;
    std::vector<int> residues;
};

const std::vector<TranscribedGroup>& transcribed(int rank, Power power) {
    using K = PowerVerdict::Kind;
    static const std::map<std::pair<int, int>, std::vector<TranscribedGroup>> tables = {
        {{4, 0},
         {{K::Always, nullptr, {1}},
          {K::Conditional, "neg-alpha-sq", {2, 3}},
          {K::Conditional, "alpha-sq", {5, 6}},
          {K::Never, nullptr, {7}}}},
        {{4, 1}, {{K::Always, nullptr, {1, 3, 5, 7}}, {K::Conditional, "alpha-cube", {2, 6}}}},
        {{5, 0},
         {{K::Always, nullptr, {1, 4}},
          {K::Conditional, "neg-alpha-sq", {2, 3}},
          {K::Never, nullptr, {6, 9}},
          {K::Conditional, "alpha-sq", {7, 8}}}},
        {{5, 1},
         {{K::Always, nullptr, {1, 3, 4, 11, 12, 14}},
          {K::Conditional, "alpha-cube", {2, 6, 7, 8, 9, 13}}}},
        {{6, 0},
         {{K::Always, nullptr, {1, 5}},
          {K::Never, nullptr, {2, 3, 7, 9, 10, 11}},
          {K::Conditional, "alpha+1-sq", {4}},
          {K::Conditional, "neg-alpha+1-sq", {8}}}},
        {{6, 1},
         {{K::Always, nullptr, {1, 3, 9, 15, 17}},
          {K::Never, nullptr, {2, 5, 7, 11, 13, 16}},
          {K::Conditional, "alpha+1-cube", {4, 14}},
          {K::Conditional, "alpha-cube", {8, 10}}}},
        {{7, 0},
         {{K::Always, nullptr, {1}},
          {K::Conditional, "one-alpha-sq", {2, 3}},
          {K::Conditional, "alpha-sq", {4, 5}},
          {K::Never, nullptr, {6, 8, 13}},
          {K::Conditional, "neg-alpha-sq", {9, 10}},
          {K::Conditional, "alpha-1-sq", {11, 12}}}},
        {{7, 1},
         {{K::Always, nullptr, {1, 3, 8, 13, 18, 20}},
          {K::Never, nullptr, {2, 5, 16, 19}},
          {K::Conditional, "alpha-cube", {4, 6, 10, 11, 15, 17}},
          {K::Conditional, "alpha-1-cube", {9, 12}}}},
        {{8, 0},
         {{K::Always, nullptr, {1, 4}},
          {K::Never, nullptr, {2, 3, 6, 7, 9, 10, 11, 12, 14, 15}},
          {K::Conditional, "eq8", {5}},
          {K::Conditional, "eq7", {13}}}},
        {{8, 1},
         {{K::Always, nullptr, {1, 7, 17, 23}},
          {K::Never, nullptr, {2, 5, 10, 11, 12, 13, 14, 19, 22}},
          {K::Conditional, "alpha-cube", {3, 4, 20, 21}},
          {K::Conditional, "2alpha-1-cube", {6, 18}},
          {K::Conditional, "alpha-1-cube", {9, 15}}}},
        {{9, 0},
         {{K::Always, nullptr, {1}},
          {K::Conditional, "alpha-sq", {5}},
          {K::Conditional, "neg-alpha-sq", {13}},
          {K::Never, nullptr, {2, 3, 4, 6, 7, 8, 10, 11, 12, 14, 15, 16, 17}}}},
        {{9, 1},
         {{K::Always, nullptr, {1, 3, 6, 12, 15, 21, 24, 26}},
          {K::Conditional, "eq14", {4, 23}},
          {K::Never, nullptr, {2, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 25}}}},
        {{10, 0},
         {{K::Always, nullptr, {1, 9}},
          {K::Conditional, "eq22", {4}},
          {K::Conditional, "alpha-sq", {5}},
          {K::Conditional, "neg-alpha-sq", {15}},
          {K::Conditional, "eq22-neg", {16}},
          {K::Never, nullptr, {2, 3, 6, 7, 8, 11, 12, 13, 14, 17, 18, 19}}}},
        {{10, 1},
         {{K::Always, nullptr, {1, 11, 19, 29}},
          {K::Conditional, "eq24", {3, 27}},
          {K::Conditional, "2alpha-1-cube", {7, 13, 17, 23}},
          {K::Conditional, "eq28", {12, 18}},
          {K::Never, nullptr, {2, 4, 5, 6, 8, 9, 14, 15, 16, 21, 22, 24, 25, 26, 28}}}},
        {{12, 0},
         {{K::Always, nullptr, {1}},
          {K::Conditional, "eq34", {4, 8}},
          {K::Conditional, "eq32", {5}},
          {K::Never,
           nullptr,
           {2, 3, 6, 7, 9, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23}}}},
        {{12, 1},
         {{K::Always, nullptr, {1, 35}},
          {K::Conditional, "alpha-1-cube", {3, 9, 15, 21, 27, 33}},
          {K::Never, nullptr, {2,  4,  5,  6,  7,  8,  10, 11, 13, 14, 16, 17, 18,
                               19, 20, 22, 23, 25, 26, 28, 29, 30, 31, 32, 34}}}},
    };
    auto it = tables.find({rank, power == Power::Cube ? 1 : 0});
    if (it == tables.end()) throw UnsupportedRank("classification covers ranks 4..10, 12");
    return it->second;
}

}  // namespace

PowerVerdict classify(int rank, int residue, Power power) {
    PowerVerdict v = classify_impl(rank, residue, power);
    if (v.kind == PowerVerdict::Kind::ZeroTerm)
        throw ZeroTermResidue("residue " + std::to_string(residue) + " indexes the zero terms");
    return v;
}

PowerVerdict classify_transcribed(int rank, int residue, Power power) {
    int mod = classifier_modulus(rank, power);
    residue = ((residue % mod) + mod) % mod;
    if (residue % rank == 0)
        throw ZeroTermResidue("residue " + std::to_string(residue) + " indexes the zero terms");
    for (const TranscribedGroup& g : transcribed(rank, power))
        for (int r : g.residues)
            if (r == residue) {
                PowerVerdict v{g.kind, power, mod, std::nullopt, ""};
                if (g.id) v.condition_id = g.id;
                return v;
            }
    throw Error("residue missing from transcribed table");
}

std::pair<bool, bool> predict_and_check(const EdsSpec& spec, unsigned long n, Power power) {
    PowerVerdict v = classify(spec.rank, static_cast<int>(n % static_cast<unsigned long>(
                                              classifier_modulus(spec.rank, power))),
                              power);
    bool predicted = false;
    switch (v.kind) {
        case PowerVerdict::Kind::Always: predicted = true; break;
        case PowerVerdict::Kind::Never: predicted = false; break;
        case PowerVerdict::Kind::Conditional:
            predicted = find_condition(*v.condition_id).holds(spec.alpha);
            break;
        case PowerVerdict::Kind::ZeroTerm: throw ZeroTermResidue("zero term");
    }
    Int term = closed_term(spec, n);
    bool actual = power == Power::Square ? is_square(term) : is_cube(term);
    return {predicted, actual};
}

std::vector<SummaryRow> summary_table(int rank, Power power) {
    int mod = classifier_modulus(rank, power);
    std::vector<SummaryRow> rows;
    for (int r = 0; r < mod; ++r) rows.push_back({r, classify_impl(rank, r, power)});
    return rows;
}

std::string render_summary_table(int rank, Power power) {
    std::ostringstream os;
    const char* pw = power == Power::Square ? "square" : "cube";
    os << "N=" << rank << " " << pw << " terms by residue mod " << classifier_modulus(rank, power)
       << "\n";
    for (const SummaryRow& row : summary_table(rank, power)) {
        os << "  n=" << row.residue << ":\t";
        switch (row.verdict.kind) {
            case PowerVerdict::Kind::ZeroTerm: os << "0"; break;
            case PowerVerdict::Kind::Always: os << "always"; break;
            case PowerVerdict::Kind::Never: os << "never\t[" << row.verdict.note << "]"; break;
            case PowerVerdict::Kind::Conditional:
                os << "iff " << find_condition(*row.verdict.condition_id).lhs();
                break;
        }
        os << "\n";
    }
    return os.str();
}

std::string summary_table_csv(int rank, Power power) {
    std::ostringstream os;
    os << "rank,power,residue,modulus,verdict,condition\n";
    const char* pw = power == Power::Square ? "square" : "cube";
    for (const SummaryRow& row : summary_table(rank, power)) {
        os << rank << ',' << pw << ',' << row.residue << ',' << row.verdict.modulus << ',';
        switch (row.verdict.kind) {
            case PowerVerdict::Kind::ZeroTerm: os << "zero,"; break;
            case PowerVerdict::Kind::Always: os << "always,"; break;
            case PowerVerdict::Kind::Never: os << "never,\"" << row.verdict.note << "\""; break;
            case PowerVerdict::Kind::Conditional:
                os << "conditional," << *row.verdict.condition_id;
                break;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace eds
