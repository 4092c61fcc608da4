#include "qdissect/theta.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

#include "qdissect/congruence.hpp"
#include "qdissect/errors.hpp"

namespace qdissect {

namespace {

QSeries eta_chain(long precision, std::initializer_list<std::pair<long, long>> factors) {
    QSeries r = QSeries::one(precision);
    for (const auto& [m, e] : factors) r = mul_eta(r, m, e);
    return r;
}

} // namespace

QSeries phi_minus(long arg_power, long precision) {
    const long k = arg_power;
    if (k < 1) throw Error("phi(-q^k) needs k >= 1");
    QSeries via_eta = eta_chain(precision, {{k, 2}, {2 * k, -1}});
    if (precision > 0) {
        std::vector<Rational> sum(static_cast<std::size_t>(precision));
        sum[0] = 1;
        for (long n = 1; k * n * n < precision; ++n)
            sum[static_cast<std::size_t>(k * n * n)] = (n % 2 == 0) ? 2 : -2;
        QSeries via_sum(0, std::move(sum), precision);
        if (!agree_on_common_range(via_eta, via_sum))
            throw Error("internal: the two phi(-q^k) expansions disagree");
    }
    return via_eta;
}

QSeries psi(long arg_power, long precision) {
    const long k = arg_power;
    if (k < 1) throw Error("psi(q^k) needs k >= 1");
    QSeries via_eta = eta_chain(precision, {{2 * k, 2}, {k, -1}});
    if (precision > 0) {
        std::vector<Rational> sum(static_cast<std::size_t>(precision));
        for (long n = 0; k * n * (n + 1) / 2 < precision; ++n)
            sum[static_cast<std::size_t>(k * n * (n + 1) / 2)] = 1;
        QSeries via_sum(0, std::move(sum), precision);
        if (!agree_on_common_range(via_eta, via_sum))
            throw Error("internal: the two psi(q^k) expansions disagree");
    }
    return via_eta;
}

QSeries w_quotient(long arg_power, long precision) {
    const long k = arg_power;
    if (k < 1) throw Error("w(q^k) needs k >= 1");
    return eta_chain(precision, {{k, 1}, {6 * k, 3}, {2 * k, -1}, {3 * k, -3}});
}

QSeries xi_series(long arg_power, long precision) {
    const long k = arg_power;
    if (k < 1) throw Error("xi(q^k) needs k >= 1");
    if (precision <= k) return QSeries::zero(precision);
    return (Rational(2) * w_quotient(3 * k, precision - k)).shifted(k);
}

QSeries kappa(long arg_power, long precision) {
    const long k = arg_power;
    if (k < 1) throw Error("kappa(q^k) needs k >= 1");
    return eta_chain(precision, {{k, 8}, {2 * k, -4}, {3 * k, -8}, {6 * k, 4}});
}

QSeries make_theta(const ThetaName& name, long precision) {
    switch (name.tag) {
        case ThetaTag::phi_minus: return phi_minus(name.arg_power, precision);
        case ThetaTag::psi: return psi(name.arg_power, precision);
        case ThetaTag::w: return w_quotient(name.arg_power, precision);
        case ThetaTag::xi: return xi_series(name.arg_power, precision);
        case ThetaTag::kappa: return kappa(name.arg_power, precision);
    }
    throw Error("unknown theta tag");
}

// Each check builds both sides with two guard terms of headroom, then
// compares on [*, precision).

CheckReport check_psi_cube_quotient(long precision) {
    const long pi = precision + 2;
    QSeries lhs = eta_chain(pi, {{6, 6}, {3, -3}, {1, 1}, {2, -2}}); // psi(q^3)^3 / psi(q)
    QSeries big = eta_chain(pi, {{3, 6}, {6, -3}, {1, -2}, {2, 1}}); // phi(-q^3)^3 / phi(-q)
    QSeries small = eta_chain(pi, {{1, 6}, {2, -3}, {3, -2}, {6, 1}}); // phi(-q)^3 / phi(-q^3)
    QSeries rhs = Rational(1, 8) * (big - small).shifted(-1);
    return check_congruence_identity("id2.1", lhs, rhs, 0, precision);
}

CheckReport check_psi_inverse_kernel(long precision) {
    const long pi = precision + 2;
    QSeries lhs = eta_chain(pi, {{1, 1}, {2, -2}}); // 1 / psi(q)
    QSeries xi = xi_series(1, pi);
    QSeries kernel = Rational(4) * xi - Rational(2) * (xi * xi) + (xi * xi) * xi;
    // (1 / psi(q^3)^3) * (phi(-q^9)^3 / phi(-q^3))
    QSeries base = eta_chain(pi, {{3, 3}, {6, -6}, {9, 6}, {18, -3}, {3, -2}, {6, 1}});
    QSeries rhs = Rational(1, 8) * (base * kernel).shifted(-1);
    return check_congruence_identity("id2.2", lhs, rhs, 0, precision);
}

CheckReport check_phi_dissection(long precision) {
    const long pi = precision + 2;
    QSeries lhs = phi_minus(1, pi);
    QSeries rhs = phi_minus(9, pi) * (QSeries::one(pi) - xi_series(1, pi));
    return check_congruence_identity("id2.3", lhs, rhs, 0, precision);
}

CheckReport check_phi_inverse_dissection(long precision) {
    const long pi = precision + 2;
    QSeries lhs = phi_minus(1, pi).inverse();
    QSeries xi = xi_series(1, pi);
    QSeries trio = QSeries::one(pi) + xi + xi * xi;
    QSeries rhs = eta_chain(pi, {{9, 6}, {18, -3}, {3, -8}, {6, 4}}) * trio;
    CheckReport report = check_congruence_identity("id2.4", lhs, rhs, 0, precision);
    // Multiplying by the companion dissection of phi(-q) itself must give 1.
    QSeries prod = phi_minus(9, pi) * (QSeries::one(pi) - xi) * rhs;
    report.absorb(check_congruence_identity("id2.4", prod, QSeries::one(pi), 0, precision));
    return report;
}

CheckReport check_xi_cube(long precision) {
    const long pi = precision + 2;
    QSeries xi = xi_series(1, pi);
    QSeries xi_cubed = (xi * xi) * xi;
    // phi(-q^3)^4 / phi(-q^9)^4
    QSeries quartic = eta_chain(pi, {{3, 8}, {6, -4}, {9, -8}, {18, 4}});
    CheckReport report =
        check_congruence_identity("id2.5", xi_cubed, QSeries::one(pi) - quartic, 0, precision);
    QSeries kq = kappa(1, pi);
    QSeries w_form = QSeries::one(pi) - Rational(8) * w_quotient(1, pi).pow(3).shifted(1);
    report.absorb(check_congruence_identity("id2.5", kq, w_form, 0, precision));
    report.absorb(
        check_congruence_identity("id2.5", kq, QSeries::one(pi) - xi, 3, precision));
    return report;
}

std::vector<CheckReport> check_all_identities(long precision) {
    return {check_psi_cube_quotient(precision), check_psi_inverse_kernel(precision),
            check_phi_dissection(precision), check_phi_inverse_dissection(precision),
            check_xi_cube(precision)};
}

} // namespace qdissect
