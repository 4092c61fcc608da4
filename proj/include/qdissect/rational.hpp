#pragma once

#include <gmpxx.h>

#include <string>

#include "qdissect/errors.hpp"

namespace qdissect {

// Exact arithmetic throughout: arbitrary-precision integers and rationals
// from GMP.  mpq_class keeps values canonical (lowest terms, positive
// denominator, 0 stored as 0/1), which the series code relies on.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt numerator(const Rational& r) { return r.get_num(); }
inline BigInt denominator(const Rational& r) { return r.get_den(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Canonical "n" or "n/d" form.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// If d == 2^e returns e, otherwise -1.  d must be positive.
inline long pow2_exponent(const BigInt& d) {
    if (sgn(d) <= 0) return -1;
    mp_bitcnt_t low = mpz_scan1(d.get_mpz_t(), 0);
    if (mpz_sizeinbase(d.get_mpz_t(), 2) == low + 1) return static_cast<long>(low);
    return -1;
}

// 3-adic valuation of a nonzero integer.
inline long valuation3(const BigInt& n) {
    if (sgn(n) == 0) throw Error("valuation3: argument is zero");
    BigInt reduced;
    static const BigInt three = 3;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), three.get_mpz_t()));
}

// 2-adic valuation of a nonzero integer.
inline long valuation2(const BigInt& n) {
    if (sgn(n) == 0) throw Error("valuation2: argument is zero");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

// a^-1 mod m; throws NonInvertibleDenominator when gcd(a, m) != 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NonInvertibleDenominator("no inverse of " + a.get_str() + " modulo " + m.get_str());
    return inv;
}

// Least nonnegative residue of r = p/q modulo m (q must be invertible).
inline BigInt mod_reduce(const Rational& r, const BigInt& m) {
    BigInt num = numerator(r) % m;
    if (sgn(num) < 0) num += m;
    if (denominator(r) == 1) return num;
    return (num * mod_inverse(denominator(r), m)) % m;
}

// Parse a rational from decimal numerator/denominator strings.
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    BigInt n(num), d(den);
    if (sgn(d) == 0) throw Error("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long ceildiv(long a, long b) { return floordiv(a + b - 1, b); }

inline long mod_floor(long a, long b) { return a - b * floordiv(a, b); }

inline BigInt pow_big(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt pow2_big(unsigned long e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

} // namespace qdissect
