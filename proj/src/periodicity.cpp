#include "eds/periodicity.hpp"

#include <numeric>
#include <sstream>

#include "eds/tate.hpp"

namespace eds {

namespace {

long lmod(const Int& v, long p) {
    Int r = v % p;
    long x = static_cast<long>(r.get_si());
    return x < 0 ? x + p : x;
}

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<unsigned __int128>(a) * static_cast<unsigned long>(b) %
                             static_cast<unsigned long>(p));
}

void check_prime(const EdsSpec& spec, long p) {
    if (p == 2) throw BadPrime("p = 2 is excluded");
    if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
    if (lmod(basis_product(spec), p) == 0)
        throw BadPrime(std::to_string(p) + " divides a basis factor; reduction collapses");
}

}  // namespace

ModEds reduce_mod(const EdsSpec& spec, long p, std::size_t count) {
    check_prime(spec, p);
    InitialValues iv = initial_values(spec);
    std::vector<long> h;
    h.reserve(count + 1);
    h.push_back(0);
    h.push_back(1);
    h.push_back(lmod(iv.h2, p));
    h.push_back(lmod(iv.h3, p));
    h.push_back(lmod(iv.h4, p));
    while (h.size() <= count) {
        std::size_t t = h.size();
        long v;
        long num;
        if (h[t - 4] != 0) {
            num = (mulmod(mulmod(h[t - 1], h[t - 3], p), mulmod(h[2], h[2], p), p) -
                   mulmod(h[3], mulmod(h[t - 2], h[t - 2], p), p) + p) % p;
            v = mulmod(num, mod_inv(h[t - 4], p), p);
        } else if (t % 2 == 1 && t >= 7 && h[3] != 0) {
            std::size_t m = (t + 3) / 2, n = (t - 3) / 2;
            num = (mulmod(mulmod(h[m + 1], h[m - 1], p), mulmod(h[n], h[n], p), p) -
                   mulmod(mulmod(h[n + 1], h[n - 1], p), mulmod(h[m], h[m], p), p) + p) % p;
            v = mulmod(num, mod_inv(h[3], p), p);
        } else if (t % 2 == 1) {
            std::size_t k = (t - 1) / 2;
            v = (mulmod(h[k + 2], mulmod(h[k], mulmod(h[k], h[k], p), p), p) -
                 mulmod(h[k - 1], mulmod(h[k + 1], mulmod(h[k + 1], h[k + 1], p), p), p) + p) % p;
        } else if (h[2] != 0) {
            std::size_t k = t / 2;
            num = (mulmod(h[k + 2], mulmod(h[k - 1], h[k - 1], p), p) -
                   mulmod(h[k - 2], mulmod(h[k + 1], h[k + 1], p), p) + p) % p;
            v = mulmod(mulmod(h[k], num, p), mod_inv(h[2], p), p);
        } else if (h[4] == 0 && h[t - 2] == 0) {
            v = 0;  // improper rank-2 shape: even terms vanish
        } else {
            throw BadPrime("collapsed reduction");
        }
        h.push_back(v);
    }
    h.resize(count + 1);
    return ModEds{p, std::move(h)};
}

long rank_of_apparition(const EdsSpec& spec, long p) {
    std::size_t cap = static_cast<std::size_t>(4L * spec.rank * (p - 1)) + 4;
    ModEds m = reduce_mod(spec, p, cap);
    long rho = 0;
    for (std::size_t n = 1; n < m.residues.size(); ++n)
        if (m.residues[n] == 0) {
            rho = static_cast<long>(n);
            break;
        }
    if (rho == 0) throw BadPrime("no zero residue found");
    if (m.residues[static_cast<std::size_t>(rho) + 1] != 0) {
        // zeros must sit exactly at the multiples of rho
        for (std::size_t n = 1; n < m.residues.size(); ++n)
            if ((m.residues[n] == 0) != (n % static_cast<std::size_t>(rho) == 0))
                throw Error("zero spacing violated at n = " + std::to_string(n));
    }
    return rho;
}

long period_direct(const EdsSpec& spec, long p) {
    std::size_t cap = static_cast<std::size_t>(4L * spec.rank * (p - 1)) + 4;
    ModEds m = reduce_mod(spec, p, cap);
    const auto& h = m.residues;
    for (std::size_t pi = 1; 3 * pi <= h.size(); ++pi) {
        bool ok = true;
        for (std::size_t n = 0; n + pi < h.size(); ++n)
            if (h[n + pi] != h[n]) {
                ok = false;
                break;
            }
        if (ok) return static_cast<long>(pi);
    }
    throw PeriodNotFound("no period below " + std::to_string(cap / 3) + " for p = " + std::to_string(p));
}

PeriodReport period_formula(const EdsSpec& spec, long p) {
    long rho = rank_of_apparition(spec, p);
    if (rho <= 3) throw RankTooSmall("rank of apparition " + std::to_string(rho) + " <= 3");
    ModEds m = reduce_mod(spec, p, static_cast<std::size_t>(rho) + 1);
    const auto& h = m.residues;
    PeriodReport r{};
    r.rho = rho;
    r.a1 = mulmod(h[2], mod_inv(h[static_cast<std::size_t>(rho) - 2], p), p);
    r.a2 = h[static_cast<std::size_t>(rho) - 1];
    r.e = mod_order(r.a1, p);
    r.k = mod_order(r.a2, p);
    auto v2 = [](long x) {
        int c = 0;
        while (x % 2 == 0) { x /= 2; ++c; }
        return c;
    };
    if (r.e % 2 == 1 && r.k % 2 == 1)
        r.nu = 1;
    else if (r.e % 2 == 0 && r.k % 2 == 0 && v2(r.e) == v2(r.k))
        r.nu = -1;
    else
        r.nu = 0;
    long l = std::lcm(r.e, r.k);
    r.tau = r.nu == 1 ? 2 * l : (r.nu == -1 ? l / 2 : l);
    r.pi = r.tau * r.rho;
    r.a1_primitive = is_primitive_root(r.a1, p);
    if (r.a1_primitive) {
        // t(p-1) with t = N for even N and N/2 for odd N
        r.shape_value = spec.rank % 2 == 0 ? static_cast<long>(spec.rank) * (p - 1)
                                           : static_cast<long>(spec.rank) * (p - 1) / 2;
    } else {
        long q = l;
        long shape_l = q % 2 == 1 ? q : q / 2;
        r.shape_value = 2L * spec.rank * shape_l;
    }
    return r;
}

PeriodGrid period_grid(int rank, const std::vector<Int>& alphas, const std::vector<long>& primes) {
    PeriodGrid g{rank, alphas, primes, {}};
    for (const Int& a : alphas) {
        std::vector<std::optional<long>> row;
        for (long p : primes) {
            try {
                EdsSpec spec(rank, a);
                long direct = period_direct(spec, p);
                long formula = period_formula(spec, p).pi;
                if (direct != formula)
                    throw Error("period mismatch at alpha=" + a.get_str() + " p=" + std::to_string(p));
                row.emplace_back(direct);
            } catch (const BadPrime&) {
                row.emplace_back(std::nullopt);
            }
        }
        g.cells.push_back(std::move(row));
    }
    return g;
}

std::string render_period_grid(const PeriodGrid& grid) {
    std::ostringstream os;
    os << "N=" << grid.rank;
    for (long p : grid.primes) os << '\t' << "F_" << p;
    os << '\n';
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        os << "alpha=" << grid.alphas[i].get_str();
        for (const auto& cell : grid.cells[i]) {
            os << '\t';
            if (cell)
                os << *cell;
            else
                os << "-";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace eds
