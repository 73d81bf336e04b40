#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/spec.hpp"

namespace eds {

// Residues h_0..h_count mod an odd prime.
struct ModEds {
    long p;
    std::vector<long> residues;
};

// Modular recurrence with the same divisor-selection order as the integer
// engine; divisions become multiplications by inverses. Throws BadPrime for
// p = 2, composite p, or p dividing an evaluated basis factor (the reduction
// then collapses to rank <= 3).
ModEds reduce_mod(const EdsSpec& spec, long p, std::size_t count);

// Smallest rho > 0 with h_rho = 0 mod p, with the zero-spacing property
// (h_n = 0 iff rho | n) verified over the scanned window.
long rank_of_apparition(const EdsSpec& spec, long p);

// Least pi with h_{n+pi} = h_n for all n, found by scanning and verified over
// the whole computed buffer. The scan cap is 4*N*(p-1) terms.
long period_direct(const EdsSpec& spec, long p);

struct PeriodReport {
    long rho;   // rank of apparition
    long a1;    // h_2 / h_{rho-2} mod p
    long a2;    // h_{rho-1} mod p
    long e;     // order of a1
    long k;     // order of a2
    int nu;     // {-1, 0, +1}
    long tau;   // 2^nu * lcm(e, k)
    long pi;    // tau * rho
    // Shape metadata: pi = t(p-1) when a1 generates (F_p)*, else 2*N*l.
    bool a1_primitive;
    long shape_value;  // the matching branch's value
};

PeriodReport period_formula(const EdsSpec& spec, long p);

// One row per alpha, one column per prime; nullopt marks a collapsed
// reduction (printed as a dash).
struct PeriodGrid {
    int rank;
    std::vector<Int> alphas;
    std::vector<long> primes;
    std::vector<std::vector<std::optional<long>>> cells;
};

PeriodGrid period_grid(int rank, const std::vector<Int>& alphas, const std::vector<long>& primes);

std::string render_period_grid(const PeriodGrid& grid);

}  // namespace eds
