#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eds/spec.hpp"

namespace eds {

struct PellProblem {
    Int D;    // positive nonsquare
    int rhs;  // +1 or -1

    PellProblem(Int D_, int rhs_);
};

// Minimal positive solution of x^2 - D y^2 = rhs from the continued fraction
// of sqrt(D); nullopt when rhs = -1 has no solution (even period).
std::optional<std::pair<Int, Int>> pell_fundamental(const Int& D, int rhs);

// First `limit` positive solutions in increasing x. Throws Unsolvable.
std::vector<std::pair<Int, Int>> pell_solutions(const PellProblem& prob, std::size_t limit);

struct IntegerPoint {
    Int x, y;  // y >= 0
};

// All integer points on y^2 = c3 x^3 + c2 x^2 + c1 x + c0 with |x| <= bound.
std::vector<IntegerPoint> bounded_cubic_search(const std::array<Int, 4>& cubic, const Int& var_bound);

enum class Power { Square, Cube };

enum class ReductionClass { Trivial, Pell, Classical, ZeroRank, Ellog, Atomic };

// One row of the equation catalogue: a product of basis polynomials required
// to be a square or a cube.
struct Condition {
    std::string id;
    Power power;
    int sign;                                   // +1 or -1 multiplier
    std::vector<std::pair<Poly, int>> product;  // factor, exponent
    ReductionClass klass;
    std::string reduction;        // the equation the row reduces to
    std::vector<long> excluded;   // parameter values outside the family
    std::vector<long> registry;   // published solutions (Ellog rows)

    Int evaluate(const Int& alpha) const;
    bool holds(const Int& alpha) const;  // genuine square / cube of the product
    std::string lhs() const;
};

const std::vector<Condition>& condition_registry();
const Condition& find_condition(const std::string& id);  // throws UnknownCondition

struct SolutionSet {
    enum class Kind { Finite, InfinitePell, Empty } kind;
    std::vector<Int> alphas;   // all solutions with |alpha| <= bound, sorted
    std::string provenance;    // trivial / pell / paper-registry / bounded-search
    std::string generator;     // description of the infinite family, if any
};

SolutionSet solve_condition(const std::string& id, const Int& alpha_bound);

// CSV: id,power,condition,class,reduction,solutions_within_1000
void dump_conditions_csv(std::ostream& out);

}  // namespace eds
