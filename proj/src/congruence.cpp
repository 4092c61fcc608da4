#include "qdissect/congruence.hpp"

#include <algorithm>

#include "qdissect/errors.hpp"

namespace qdissect {

QSeries gen_b(long precision) {
    return mul_eta(mul_eta(QSeries::one(precision), 1, -2), 2, -2);
}

QSeries gen_a(long precision) {
    return mul_eta(mul_eta(QSeries::one(precision), 1, -1), 2, -1);
}

QSeries gen_p(long precision) { return mul_eta(QSeries::one(precision), 1, -1); }

ModSeries gen_b_mod(long precision, std::uint64_t modulus) {
    ModSeries s = ModSeries::one(precision, modulus);
    s.mul_eta(1, -2);
    s.mul_eta(2, -2);
    return s;
}

ModSeries gen_a_mod(long precision, std::uint64_t modulus) {
    ModSeries s = ModSeries::one(precision, modulus);
    s.mul_eta(1, -1);
    s.mul_eta(2, -1);
    return s;
}

ModSeries gen_p_mod(long precision, std::uint64_t modulus) {
    ModSeries s = ModSeries::one(precision, modulus);
    s.mul_eta(1, -1);
    return s;
}

CheckReport check_progression(const std::string& claim, const QSeries& series, long m,
                              long r, const BigInt& modulus, long limit) {
    if (m < 1 || r < 0) throw Error("progression needs m >= 1 and r >= 0");
    if (modulus < 2) throw Error("modulus must be >= 2");
    if (limit > series.precision())
        throw QueryBeyondPrecision("progression check to " + std::to_string(limit) +
                                   " needs precision >= that, have " +
                                   std::to_string(series.precision()));
    CheckReport report;
    report.claim = claim;
    report.modulus = modulus;
    report.progressions = {{m, r}};
    for (long n = 0; m * n + r < limit; ++n) {
        ++report.checked;
        const BigInt residue = mod_reduce(series.coeff(m * n + r), modulus);
        if (residue != 0) report.add_violation(n, to_string(residue));
    }
    return report;
}

CheckReport check_progression(const std::string& claim, const ModSeries& series, long m,
                              long r, long limit) {
    if (m < 1 || r < 0) throw Error("progression needs m >= 1 and r >= 0");
    if (limit > series.precision())
        throw QueryBeyondPrecision("progression check to " + std::to_string(limit) +
                                   " needs precision >= that, have " +
                                   std::to_string(series.precision()));
    CheckReport report;
    report.claim = claim;
    report.modulus = static_cast<unsigned long>(series.modulus());
    report.progressions = {{m, r}};
    for (long n = 0; m * n + r < limit; ++n) {
        ++report.checked;
        const std::uint64_t residue = series.at(m * n + r);
        if (residue != 0)
            report.add_violation(n, std::to_string(residue));
    }
    return report;
}

CheckReport check_congruence_identity(const std::string& claim, const QSeries& lhs,
                                      const QSeries& rhs, const BigInt& modulus,
                                      long limit) {
    if (modulus != 0 && modulus < 2) throw Error("modulus must be 0 (exact) or >= 2");
    if (limit > lhs.precision() || limit > rhs.precision())
        throw QueryBeyondPrecision("identity check to " + std::to_string(limit) +
                                   " exceeds a side's precision");
    CheckReport report;
    report.claim = claim;
    report.modulus = modulus;
    const long start = std::min({lhs.valuation(), rhs.valuation(), 0L});
    for (long n = start; n < limit; ++n) {
        ++report.checked;
        const Rational diff = lhs.coeff(n) - rhs.coeff(n);
        if (modulus == 0) {
            if (diff != 0) report.add_violation(n, to_string(diff));
        } else {
            const BigInt residue = mod_reduce(diff, modulus);
            if (residue != 0) report.add_violation(n, to_string(residue));
        }
    }
    return report;
}

CheckReport check_congruence_identity(const std::string& claim, const ModSeries& lhs,
                                      const ModSeries& rhs, long limit) {
    if (lhs.modulus() != rhs.modulus())
        throw Error("cannot compare series over different moduli");
    if (limit > lhs.precision() || limit > rhs.precision())
        throw QueryBeyondPrecision("identity check to " + std::to_string(limit) +
                                   " exceeds a side's precision");
    CheckReport report;
    report.claim = claim;
    report.modulus = static_cast<unsigned long>(lhs.modulus());
    for (long n = 0; n < limit; ++n) {
        ++report.checked;
        const std::uint64_t a = lhs.at(n);
        const std::uint64_t b = rhs.at(n);
        if (a != b) {
            const std::uint64_t diff = a >= b ? a - b : a + (lhs.modulus() - b);
            report.add_violation(n, std::to_string(diff));
        }
    }
    return report;
}

CheckReport verify_chan_identity(long limit) {
    if (limit < 1) throw Error("limit must be >= 1");
    const long big = 3 * limit + 3;
    QSeries a = gen_a(big);
    QSeries lhs = extract(a, 3, 2);
    QSeries quotient = mul_eta(
        mul_eta(mul_eta(mul_eta(QSeries::one(limit), 3, 3), 6, 3), 1, -4), 2, -4);
    CheckReport report =
        check_congruence_identity("chan-identity", lhs, Rational(3) * quotient, 0, limit);
    report.progressions = {{3, 2}};
    report.absorb(check_progression("chan-identity", a, 3, 2, 3, big));
    return report;
}

CheckReport verify_b547() {
    CheckReport report;
    report.claim = "b547";
    const QSeries b = gen_b(548);
    const Rational& c = b.coeff(547);
    const BigInt value = numerator(c);
    const BigInt expected("2135474526556068875092854278074796547960");

    ++report.checked;
    if (denominator(c) != 1 || value != expected)
        report.add_violation(547, to_string(c));

    ++report.checked;
    if (valuation3(value) != 7)
        report.add_violation(547, "3-adic valuation " + std::to_string(valuation3(value)));

    ++report.checked;
    const BigInt product = BigInt(8) * pow_big(3, 7) * 5 * 41 * 61 * 151 * 11909 *
                           BigInt("5427748132276664632973303");
    if (product != value) report.add_violation(547, "factorization product " + to_string(product));
    return report;
}

CheckReport verify_lin_family_alpha0(long n_limit) {
    if (n_limit < 1) throw Error("n_limit must be >= 1");
    CheckReport report;
    report.claim = "lin-family-27";
    report.modulus = 27;
    // index(k, n) = 81 (7 (7n + k) + 4) + 7 = 3969 n + 567 k + 331
    const long max_index = 3969 * (n_limit - 1) + 567 * 6 + 331;
    const ModSeries b27 = gen_b_mod(max_index + 1, 27);
    for (long k = 1; k <= 6; ++k) {
        const long offset = 567 * k + 331;
        report.progressions.push_back({3969, offset});
        for (long n = 0; n < n_limit; ++n) {
            ++report.checked;
            const std::uint64_t residue = b27.at(3969 * n + offset);
            if (residue != 0) report.add_violation(n, std::to_string(residue));
        }
    }
    // Cross-check the first family member against the exact backend.
    const QSeries b = gen_b(899);
    ++report.checked;
    const BigInt exact_residue = mod_reduce(b.coeff(898), 27);
    if (exact_residue != b27.at(898) || exact_residue != 0)
        report.add_violation(898, to_string(exact_residue));
    return report;
}

CheckReport verify_poly_1_minus_x_20() {
    CheckReport report;
    report.claim = "poly20";
    report.modulus = 9;
    static const long expected[21] = {1, 7, 1, 3, 3, 3, 6, 6, 6, 7, 4,
                                      7, 6, 6, 6, 3, 3, 3, 1, 7, 1};
    for (long j = 0; j <= 20; ++j) {
        ++report.checked;
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), 20, static_cast<unsigned long>(j));
        if (j % 2 == 1) binom = -binom;
        BigInt residue = binom % 9;
        if (sgn(residue) < 0) residue += 9;
        if (residue != expected[j]) report.add_violation(j, to_string(residue));
    }
    return report;
}

} // namespace qdissect
