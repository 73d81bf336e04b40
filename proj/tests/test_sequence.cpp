#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eds/sequence.hpp"
#include "eds/tate.hpp"

using namespace eds;

namespace {

EdsSequence make(int rank, long alpha, std::size_t n) {
    EdsSequence s(initial_values(EdsSpec(rank, Int(alpha))));
    s.extend_to(n);
    return s;
}

}  // namespace

TEST_CASE("extension reproduces hand-computed terms") {
    // [1; -2; -8; 0]: h5 * h1 = h4 h2^3 - h1 h3^3 = 0 - (-8)^3
    EdsSequence s(InitialValues{-2, -8, 0});
    s.extend_to(5);
    CHECK(s.term(5) == 512);

    // [1; -2; -8; 64]: h6 h2 = h3 (h5 h2^2 - h1 h4^2), with h5 = 0
    EdsSequence t(InitialValues{-2, -8, 64});
    t.extend_to(6);
    CHECK(t.term(5) == 0);
    CHECK(t.term(6) == -16384);
}

TEST_CASE("rank 12 seed terms at alpha = 3") {
    EdsSequence s = make(12, 3, 4);
    CHECK(s.term(2) == Int("-948480"));
    CHECK(s.term(3) == Int("-53329136320512000"));
    CHECK(s.term(4) == Int("-27346122891266847865307136000000"));
}

TEST_CASE("recurrence identity") {
    EdsSequence s(InitialValues{-2, -8, 0});
    s.extend_to(12);
    CHECK(check_eq11(s, 1, 1));  // reduces to h2 * h0 = 0
    CHECK(check_eq11(s, 3, 2));
    for (std::size_t n = 1; n < 6; ++n)
        for (std::size_t m = n; m + n <= 12; ++m) CHECK(check_eq11(s, m, n));

    // corrupt one term and the identity must break
    std::vector<Int> terms;
    for (std::size_t i = 0; i <= 12; ++i) terms.push_back(s.term(i));
    terms[5] += 1;
    EdsSequence bad = EdsSequence::from_terms(std::move(terms));
    CHECK_FALSE(check_eq11(bad, 3, 2));
}

TEST_CASE("divisibility property") {
    EdsSequence s = make(4, 2, 12);
    CHECK(check_divisibility(s, 12));
    CHECK(s.term(4) == 0);
    CHECK(s.term(8) == 0);
    CHECK(s.term(12) == 0);
    CHECK(check_divisibility(s, 1));  // vacuous

    EdsSequence t = make(6, 1, 18);
    CHECK(check_divisibility(t, 18));
    for (std::size_t n = 1; n <= 18; ++n) CHECK((t.term(n) == 0) == (n % 6 == 0));
}

TEST_CASE("zero pattern for every family") {
    for (int rank : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12})
        for (long a = -4; a <= 4; ++a) {
            if (!alpha_admissible(rank, Int(a))) continue;
            EdsSequence s = make(rank, a, 3 * rank);
            for (std::size_t n = 0; n <= 3 * static_cast<std::size_t>(rank); ++n)
                CHECK((s.term(n) == 0) == (n % static_cast<std::size_t>(rank) == 0));
        }
}

TEST_CASE("improper sequences") {
    // h2 = 0: [1; 0; -b^2; 0] has every even term zero
    EdsSequence s(InitialValues{0, -9, 0});
    s.extend_to(13);
    CHECK_FALSE(s.initial().proper());
    for (std::size_t n = 0; n <= 13; ++n) CHECK((s.term(n) == 0) == (n % 2 == 0));
    CHECK(s.term(5) == 729);  // b^6 at b = 3

    // h3 = 0: [1; a3; 0; -a3^5]
    EdsSequence t(InitialValues{2, 0, -32});
    t.extend_to(12);
    for (std::size_t n = 0; n <= 12; ++n) CHECK((t.term(n) == 0) == (n % 3 == 0));
}

TEST_CASE("extension is deterministic regardless of chunking") {
    EdsSequence a = make(8, 3, 40);
    EdsSequence b(initial_values(EdsSpec(8, Int(3))));
    for (std::size_t n = 5; n <= 40; ++n) b.extend_to(n);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(a.term(n) == b.term(n));
}

TEST_CASE("non-EDS seeds fail on the first inexact division") {
    EdsSequence s(InitialValues{2, 3, 5});  // h2 does not divide h4
    CHECK_THROWS_AS(s.extend_to(8), NonExactDivision);
}

TEST_CASE("degenerate seeds with no usable instantiation") {
    EdsSequence s(InitialValues{0, 5, 7});  // h2 = 0 but h4 != 0
    CHECK_THROWS_AS(s.extend_to(8), NoUsableInstantiation);
}

TEST_CASE("equivalence transform") {
    EdsSequence s = make(6, 2, 10);
    SUBCASE("omega = 1 is the identity") {
        EdsSequence t = apply_equivalence(s, EquivalenceScale{Rat(1)}, 10);
        for (std::size_t n = 0; n <= 10; ++n) CHECK(t.term(n) == s.term(n));
    }
    SUBCASE("omega = -1 flips terms with even n") {
        EdsSequence t = apply_equivalence(s, EquivalenceScale{Rat(-1)}, 10);
        for (std::size_t n = 1; n <= 10; ++n)
            CHECK(t.term(n) == (n % 2 == 0 ? Int(-s.term(n)) : s.term(n)));
    }
    SUBCASE("scaling by omega then 1/omega restores the terms") {
        EdsSequence t = apply_equivalence(s, EquivalenceScale{Rat(3)}, 10);
        EdsSequence u = apply_equivalence(t, EquivalenceScale{Rat(1, 3)}, 10);
        for (std::size_t n = 0; n <= 10; ++n) CHECK(u.term(n) == s.term(n));
    }
    SUBCASE("the transformed sequence still satisfies the recurrence") {
        EdsSequence t = apply_equivalence(s, EquivalenceScale{Rat(2)}, 10);
        for (std::size_t n = 1; n < 5; ++n)
            for (std::size_t m = n; m + n <= 10; ++m) CHECK(check_eq11(t, m, n));
    }
    SUBCASE("fractional omega without integral result is rejected") {
        CHECK_THROWS_AS(apply_equivalence(s, EquivalenceScale{Rat(1, 7)}, 10), NonIntegerResult);
    }
}

TEST_CASE("worked order-8 example and its omega = 2 rescaling") {
    EdsSequence s(InitialValues{-120, -864000, Int("-186624000000")});
    s.extend_to(8);
    CHECK(s.term(8) == 0);
    EdsSequence t = apply_equivalence(s, EquivalenceScale{Rat(2)}, 8);
    CHECK(t.term(2) == -960);
    CHECK(t.term(3) == -221184000);
    CHECK(t.term(4) == Int("-6115295232000000"));
}
