#include "eds/numbers.hpp"

#include <cstdlib>

namespace eds {

Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw NonExactDivision("division by zero");
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw NonExactDivision("non-exact division: " + num.get_str() + " / " + den.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw Error("0 raised to a negative power");
        return Rat(0);
    }
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), ue);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

Int isqrt_floor(const Int& x) {
    if (x < 0) throw Error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

Int icbrt(const Int& x) {
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3);
    return r;
}

bool is_square(const Int& x) {
    if (x < 0) return false;
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_cube(const Int& x) {
    Int r;
    return mpz_root(r.get_mpz_t(), x.get_mpz_t(), 3) != 0;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pow(long b, long e, long p) {
    unsigned __int128 acc = 1, base = static_cast<unsigned __int128>(((b % p) + p) % p);
    while (e > 0) {
        if (e & 1) acc = acc * base % static_cast<unsigned long>(p);
        base = base * base % static_cast<unsigned long>(p);
        e >>= 1;
    }
    return static_cast<long>(acc);
}

long mod_inv(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw Error("no inverse of 0");
    return mod_pow(a, p - 2, p);
}

long mod_order(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw Error("order of 0 mod p undefined");
    // order divides p-1: factor p-1 and strip prime factors
    long order = p - 1;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        while (order % q == 0 && mod_pow(a, order / q, p) == 1) order /= q;
    }
    if (m > 1)
        while (order % m == 0 && mod_pow(a, order / m, p) == 1) order /= m;
    return order;
}

bool is_primitive_root(long a, long p) {
    if (a % p == 0) return false;
    return mod_order(a, p) == p - 1;
}

std::string format_int(const Int& v, unsigned max_digits) {
    std::string s = v.get_str();
    std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
    if (max_digits == 0 || digits <= max_digits) return s;
    unsigned keep = max_digits / 2 < 4 ? 4 : max_digits / 2;
    std::string sign = s[0] == '-' ? "-" : "";
    std::string body = s.substr(sign.size());
    return sign + body.substr(0, keep) + "..." + body.substr(body.size() - keep) + " (" +
           std::to_string(digits) + " digits)";
}

}  // namespace eds
