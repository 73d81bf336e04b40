#pragma once

#include <cstddef>
#include <vector>

#include "eds/numbers.hpp"

namespace eds {

// Seed values [1; h2; h3; h4]. h1 is always 1 and h0 is always 0.
struct InitialValues {
    Int h2, h3, h4;

    // h2*h3 != 0 and h2 | h4; sequences violating this are improper but still
    // representable.
    bool proper() const;
};

// Dense, memoized prefix of an elliptic divisibility sequence. A populated
// value never mutates existing terms; extension appends only, so a const
// reference is safe to share across threads.
class EdsSequence {
  public:
    explicit EdsSequence(InitialValues iv);
    static EdsSequence from_terms(std::vector<Int> terms);

    const InitialValues& initial() const { return iv_; }
    std::size_t size() const { return h_.size(); }  // populated terms: h_0..h_{size-1}
    const Int& term(std::size_t n) const;

    // Populate h_0..h_n. Divisor choice per step: the instantiation with
    // divisor h_{t-4}, then the one with divisor h_3 (odd t), then the
    // duplication formulas. Every division must be exact.
    void extend_to(std::size_t n);

  private:
    EdsSequence() = default;
    Int step(std::size_t t) const;

    InitialValues iv_;
    std::vector<Int> h_;
};

// h_{m+n} h_{m-n} == h_{m+1} h_{m-1} h_n^2 - h_{n+1} h_{n-1} h_m^2, exactly.
bool check_eq11(const EdsSequence& s, std::size_t m, std::size_t n);

// h_n | h_m whenever n | m, for 1 <= n <= m <= up_to. A zero term divides
// only zero terms.
bool check_divisibility(const EdsSequence& s, std::size_t up_to);

struct EquivalenceScale {
    Rat omega;  // nonzero

    explicit EquivalenceScale(Rat w);
};

// h'_n = omega^(n^2-1) * h_n for n <= up_to; every transformed term must be
// an integer.
EdsSequence apply_equivalence(const EdsSequence& s, const EquivalenceScale& scale, std::size_t up_to);

}  // namespace eds
