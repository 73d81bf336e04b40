#pragma once

#include <gmpxx.h>

#include <string>

#include "eds/errors.hpp"

namespace eds {

using Int = mpz_class;
using Rat = mpq_class;

// num / den, throwing NonExactDivision unless the remainder is zero.
Int exact_div(const Int& num, const Int& den);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

Int isqrt_floor(const Int& x);   // x >= 0
Int icbrt(const Int& x);         // truncated, any sign

// A square here is a genuine one: x >= 0 and isqrt(x)^2 == x.
bool is_square(const Int& x);
// Cubes may be negative.
bool is_cube(const Int& x);

bool is_prime(long p);

long mod_pow(long b, long e, long p);
long mod_inv(long a, long p);
// Multiplicative order of a mod p (a != 0 mod p, p prime).
long mod_order(long a, long p);
bool is_primitive_root(long a, long p);

// Decimal rendering; if max_digits > 0 and the number is longer, abbreviate as
// "<head>...<tail> (<k> digits)".
std::string format_int(const Int& v, unsigned max_digits = 0);

}  // namespace eds
