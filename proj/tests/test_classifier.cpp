#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eds/classifier.hpp"
#include "eds/closed_form.hpp"

using namespace eds;

TEST_CASE("derived verdicts equal the transcribed table") {
    for (int rank : {4, 5, 6, 7, 8, 9, 10, 12})
        for (Power power : {Power::Square, Power::Cube}) {
            int mod = classifier_modulus(rank, power);
            for (int r = 1; r < mod; ++r) {
                if (r % rank == 0) continue;
                PowerVerdict derived = classify(rank, r, power);
                PowerVerdict fixed = classify_transcribed(rank, r, power);
                INFO("rank ", rank, " residue ", r, " power ",
                     power == Power::Square ? "square" : "cube");
                CHECK(derived.kind == fixed.kind);
                CHECK(derived.condition_id == fixed.condition_id);
            }
        }
}

TEST_CASE("individual verdicts") {
    CHECK(classify(6, 1, Power::Square).kind == PowerVerdict::Kind::Always);
    PowerVerdict v = classify(6, 4, Power::Square);
    CHECK(v.kind == PowerVerdict::Kind::Conditional);
    CHECK(*v.condition_id == "alpha+1-sq");
    CHECK(classify(8, 2, Power::Square).kind == PowerVerdict::Kind::Never);
    PowerVerdict c = classify(10, 7, Power::Cube);
    CHECK(c.kind == PowerVerdict::Kind::Conditional);
    CHECK(*c.condition_id == "2alpha-1-cube");
}

TEST_CASE("every residue class is covered exactly once") {
    for (int rank : {4, 5, 6, 7, 8, 9, 10, 12})
        for (Power power : {Power::Square, Power::Cube}) {
            int mod = classifier_modulus(rank, power);
            auto rows = summary_table(rank, power);
            REQUIRE(static_cast<int>(rows.size()) == mod);
            for (const SummaryRow& row : rows) {
                bool zero = row.residue % rank == 0;
                CHECK((row.verdict.kind == PowerVerdict::Kind::ZeroTerm) == zero);
                if (row.verdict.kind == PowerVerdict::Kind::Conditional)
                    CHECK(row.verdict.condition_id.has_value());
                else
                    CHECK_FALSE(row.verdict.condition_id.has_value());
            }
        }
}

TEST_CASE("predictions match reality on spot checks") {
    auto pc = predict_and_check(EdsSpec(4, Int(9)), 6, Power::Square);
    CHECK(pc == std::pair<bool, bool>{true, true});  // 9^13 is a square

    auto cube = predict_and_check(EdsSpec(9, Int(19)), 4, Power::Cube);
    CHECK(cube == std::pair<bool, bool>{true, true});  // gamma(19) = 343

    auto no = predict_and_check(EdsSpec(8, Int(2)), 2, Power::Square);
    CHECK(no == std::pair<bool, bool>{false, false});  // h_2 = -24

    // the rank-10 conjunction that is solvable only at alpha = 2
    auto e28 = predict_and_check(EdsSpec(10, Int(2)), 12, Power::Cube);
    CHECK(e28 == std::pair<bool, bool>{true, true});
    auto e28b = predict_and_check(EdsSpec(10, Int(3)), 12, Power::Cube);
    CHECK(e28b == std::pair<bool, bool>{false, false});

    // negative-parameter square families
    auto neg = predict_and_check(EdsSpec(4, Int(-4)), 2, Power::Square);
    CHECK(neg == std::pair<bool, bool>{true, true});  // h_2 = -alpha = 4
    auto neg6 = predict_and_check(EdsSpec(6, Int(-5)), 8, Power::Square);
    CHECK(neg6 == std::pair<bool, bool>{true, true});  // -(alpha+1) = 4
}

TEST_CASE("soundness sweep on a reduced range") {
    for (int rank : {4, 5, 6, 7, 8, 9, 10, 12})
        for (long a = -8; a <= 8; ++a) {
            if (!alpha_admissible(rank, Int(a))) continue;
            EdsSpec spec(rank, Int(a));
            for (unsigned long n = 1; n <= 3UL * static_cast<unsigned long>(rank); ++n) {
                if (n % static_cast<unsigned long>(rank) == 0) continue;
                for (Power power : {Power::Square, Power::Cube}) {
                    auto [predicted, actual] = predict_and_check(spec, n, power);
                    INFO("rank ", rank, " alpha ", a, " n ", n);
                    CHECK(predicted == actual);
                }
            }
        }
}

TEST_CASE("never verdicts correspond to empty catalogued conditions") {
    // the named Never rows backed by catalogue entries must have no solutions
    for (const char* id : {"eq5", "eq9", "eq11", "eq12", "eq13", "eq23", "eq33", "eq37"})
        CHECK(solve_condition(id, Int(1000)).kind == SolutionSet::Kind::Empty);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(classify(6, 0, Power::Square), ZeroTermResidue);
    CHECK_THROWS_AS(classify(6, 6, Power::Square), ZeroTermResidue);
    CHECK_THROWS_AS(classify(3, 1, Power::Square), UnsupportedRank);
    CHECK_THROWS_AS(classifier_modulus(11, Power::Cube), UnsupportedRank);
}

TEST_CASE("rendered tables") {
    std::string text = render_summary_table(4, Power::Square);
    CHECK(text.find("always") != std::string::npos);
    CHECK(text.find("never") != std::string::npos);
    std::string csv = summary_table_csv(4, Power::Cube);
    CHECK(csv.find("4,cube,2,8,conditional,alpha-cube") != std::string::npos);
}
