#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "eds/closed_form.hpp"
#include "eds/sequence.hpp"
#include "eds/tate.hpp"

using namespace eds;

TEST_CASE("single terms") {
    CHECK(closed_term(EdsSpec(4, Int(2)), 5) == 512);  // alpha^9
    CHECK(closed_term(EdsSpec(12, Int(3)), 2) == Int("-948480"));
    for (int rank : {4, 5, 6, 7, 8, 9, 10, 12})
        CHECK(closed_term(EdsSpec(rank, Int(3)), static_cast<unsigned long>(rank)) == 0);
    CHECK(closed_term(EdsSpec(5, Int(2)), 6) == -16384);
}

TEST_CASE("factor exponent vectors") {
    TermFactorization f = term_factorization(EdsSpec(8, Int(5)), 3);
    CHECK(f.sign == -1);
    CHECK(f.exponents.at(Poly::Alpha) == 8);
    CHECK(f.exponents.at(Poly::AlphaMinus1) == 3);
    CHECK(f.exponents.at(Poly::TwoAlphaMinus1) == 3);

    TermFactorization g = term_factorization(EdsSpec(6, Int(4)), 3);
    CHECK(g.sign == -1);
    CHECK(g.exponents.at(Poly::Alpha) == 3);
    CHECK(g.exponents.at(Poly::AlphaPlus1) == 3);

    TermFactorization one = term_factorization(EdsSpec(9, Int(7)), 1);
    CHECK(one.sign == 1);
    CHECK(one.exponents.empty());

    // rank 12, n = 6: the composite factor carries exponent 13 and splits
    TermFactorization t = term_factorization(EdsSpec(12, Int(3)), 6);
    CHECK(t.exponents.at(Poly::Alpha) == 2 + 13);
    CHECK(t.exponents.at(Poly::AlphaMinus1) == 86);
    CHECK(t.exponents.at(Poly::TwoAlphaMinus1) == 2 + 13);
    CHECK(t.exponents.at(Poly::G3) == 13);
    CHECK(t.exponents.at(Poly::Theta) == 12);
    CHECK(t.sign == -1);  // +1 from the sign row, flipped by the odd composite exponent
}

TEST_CASE("factorization reproduces the term") {
    for (int rank : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12})
        for (long a : {-7L, -2L, 2L, 3L, 9L}) {
            if (!alpha_admissible(rank, Int(a))) continue;
            EdsSpec spec(rank, Int(a));
            for (unsigned long n = 0; n <= 40; ++n) {
                TermFactorization f = term_factorization(spec, n);
                CHECK(f.value(spec.alpha) == closed_term(spec, n));
            }
        }
}

TEST_CASE("closed form equals the recurrence") {
    CHECK(verify_closed_form(EdsSpec(5, Int(2)), 60).ok);
    CHECK(verify_closed_form(EdsSpec(12, Int(3)), 8).ok);
    CHECK(verify_closed_form(EdsSpec(4, Int(-1)), 40).ok);
    for (int rank : {2, 3, 6, 7, 8, 9, 10})
        for (long a : {-5L, -2L, 3L}) {
            if (!alpha_admissible(rank, Int(a))) continue;
            VerifyReport rep = verify_closed_form(EdsSpec(rank, Int(a)), 50);
            INFO("rank ", rank, " alpha ", a, " first mismatch at ", rep.first_mismatch);
            CHECK(rep.ok);
        }
}

TEST_CASE("exponents are integral and nonnegative on every residue class") {
    for (int rank : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        const ClosedFormTable& t = closed_form_table(rank);
        for (const FactorRule& rule : t.factors) {
            long cycle = std::lcm(std::lcm(rule.modulus, rule.divisor), static_cast<long>(rank));
            for (long n = 1; n <= 3 * cycle; ++n) {
                if (n % rank == 0) continue;
                long e = factor_exponent(rule, static_cast<unsigned long>(n));  // throws on corruption
                CHECK(e >= 0);
            }
        }
    }
}

TEST_CASE("sign rows cover every residue class") {
    for (int rank : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        const ClosedFormTable& t = closed_form_table(rank);
        REQUIRE(static_cast<int>(t.sign.size()) == t.sign_modulus);
        for (int r = 0; r < t.sign_modulus; ++r) {
            if (r % rank == 0)
                CHECK(t.sign[static_cast<std::size_t>(r)] == 0);
            else
                CHECK(t.sign[static_cast<std::size_t>(r)] != 0);
        }
    }
}

TEST_CASE("csv dump lists every factor rule") {
    std::ostringstream os;
    dump_closed_form_csv(os);
    std::string csv = os.str();
    CHECK(csv.find("rank,factor,residue,coeff,offset,divisor") == 0);
    CHECK(csv.find("12,2alpha-1,6,1,-12,24") != std::string::npos);
    CHECK(csv.find("4,alpha,1,3,3,8") != std::string::npos);
}
