#pragma once

#include <cstdint>
#include <vector>

#include "qdissect/qseries.hpp"

namespace qdissect {

// Dense power series over Z/M with valuation 0: the coefficient of q^n is
// at(n) for 0 <= n < precision().  This is the deep-range backend — a plain
// uint64 coefficient vector with the same sparse pentagonal eta passes as
// QSeries, for ranges where exact rationals would be needlessly heavy.
//
// The modulus must satisfy 2 <= M < 2^63 so that a sum of two reduced
// residues never wraps; products reduce through 128-bit intermediates.
class ModSeries {
public:
    ModSeries(long precision, std::uint64_t modulus); // identically zero
    static ModSeries one(long precision, std::uint64_t modulus);

    long precision() const { return static_cast<long>(coeffs_.size()); }
    std::uint64_t modulus() const { return modulus_; }

    // Coefficient of q^n; throws QueryBeyondPrecision outside [0, precision).
    std::uint64_t at(long n) const;

    // Multiply by (q^m; q^m)_inf^e in place via the pentagonal-number
    // recurrence, one sparse pass per unit of |e|.  Precision is preserved.
    void mul_eta(long m, long e);

    // Coefficients at exponents m*n + r, n >= 0.
    ModSeries extracted(long m, long r) const;

    // Scalar multiple (c reduced mod M first).
    ModSeries scaled(std::uint64_t c) const;

    const std::vector<std::uint64_t>& window() const { return coeffs_; }

    friend ModSeries mod_series_of(const QSeries&, std::uint64_t);

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> coeffs_;
};

// Reduce an exact series with valuation >= 0 into the mod-M backend on
// [0, a.precision()).  Every denominator must be invertible mod M.
ModSeries mod_series_of(const QSeries& a, std::uint64_t modulus);

} // namespace qdissect
