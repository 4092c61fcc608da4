#pragma once

#include <vector>

#include "qdissect/rational.hpp"

namespace qdissect {

/*
 * Truncated Laurent series over the exact rationals.
 *
 * A QSeries knows the coefficient of q^n for every n < precision(); the
 * coefficients below valuation() are zero and the ones in
 * [valuation(), precision()) are stored densely.  The valuation is tight:
 * the stored leading coefficient is nonzero.  The unique exception is the
 * zero series (no known-nonzero coefficient anywhere in range), stored with
 * an empty window and valuation() == precision().
 *
 * Precision propagates pessimistically through arithmetic so that every
 * stored coefficient is provably correct:
 *   a + b : min(a.precision, b.precision)
 *   a * b : min(a.precision + b.valuation, b.precision + a.valuation)
 *   1 / a : a.precision - 2 * a.valuation   (valuation negates)
 * Multiplying by an eta factor (q^m; q^m)_inf or its inverse keeps the
 * precision unchanged: those factors are known exactly to any order.
 */
class QSeries {
public:
    // Normalizes: trims leading zeros (advancing the valuation), collapses an
    // all-zero window to the zero series.  coeffs.size() must equal
    // precision - valuation.
    QSeries(long valuation, std::vector<Rational> coeffs, long precision);

    static QSeries zero(long precision);
    static QSeries one(long precision);
    static QSeries monomial(const Rational& c, long exponent, long precision);

    long valuation() const { return val_; }
    long precision() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Exact coefficient of q^n.  Throws QueryBeyondPrecision for n >= precision().
    const Rational& coeff(long n) const;

    // Window of stored coefficients, index i holding the coefficient of
    // q^(valuation() + i).
    const std::vector<Rational>& window() const { return coeffs_; }

    QSeries operator-() const;

    // Multiply by q^e (shifts valuation and precision by e).
    QSeries shifted(long e) const;

    // Drop knowledge above new_precision (must not exceed precision()).
    QSeries truncated(long new_precision) const;

    // Multiplicative inverse; leading coefficient must be nonzero, i.e. the
    // series must not be zero.  Throws ZeroLeadingCoefficient otherwise.
    QSeries inverse() const;

    // Integer power, negative exponents via inverse().  pow(0) is 1 with the
    // relative precision of this series.
    QSeries pow(long k) const;

private:
    long val_;
    long prec_;
    std::vector<Rational> coeffs_; // size prec_ - val_, front nonzero unless empty

    QSeries() : val_(0), prec_(0) {}
    friend QSeries operator+(const QSeries&, const QSeries&);
    friend QSeries operator-(const QSeries&, const QSeries&);
    friend QSeries operator*(const QSeries&, const QSeries&);
    friend QSeries operator*(const Rational&, const QSeries&);
    friend QSeries mul_eta(const QSeries&, long, long);
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);

// True when both series agree on every exponent where both are known, i.e.
// below min(a.precision, b.precision).
bool agree_on_common_range(const QSeries& a, const QSeries& b);

// Nonzero support of (q^m; q^m)_inf - 1 below exponent `len`: pairs
// (m k(3k±1)/2, (-1)^k) from Euler's pentagonal number theorem, ascending.
std::vector<std::pair<long, int>> pentagonal_support(long m, long len);

// (q^m; q^m)_inf as a series: the pentagonal-number expansion
// sum_k (-1)^k q^(m k(3k-1)/2), which has O(sqrt(P/m)) nonzero terms.
QSeries eta_factor(long m, long precision);

// a * (q^m; q^m)_inf^e using the sparse pentagonal support, one pass per
// unit of |e|; e may be negative.  Precision is preserved.
QSeries mul_eta(const QSeries& a, long m, long e);

// (q^m; q^m)_inf^e to the given precision.
QSeries eta(long m, long e, long precision);

// Sub-series of exponents congruent to r mod m: sum a_(mn+r) q^n.
QSeries extract(const QSeries& a, long m, long r);

// q -> q^m (m >= 1): coefficient of q^(mn) is a_n, others zero.  The result
// is known up to exponent m * a.precision.
QSeries substitute_power(const QSeries& a, long m);

// Reduce every known coefficient to its least nonnegative residue mod M
// (M >= 2).  Coefficient denominators must be invertible mod M; otherwise
// NonInvertibleDenominator names the offending exponent.
QSeries reduce_mod(const QSeries& a, const BigInt& M);

} // namespace qdissect
