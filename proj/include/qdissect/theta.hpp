#pragma once

#include <vector>

#include "qdissect/check_report.hpp"
#include "qdissect/qseries.hpp"

namespace qdissect {

// The classical building blocks, each takeable at q^k:
//   phi_minus: phi(-q) = (q;q)^2 / (q^2;q^2) = 1 + 2 sum (-1)^n q^(n^2)
//   psi:       psi(q) = (q^2;q^2)^2 / (q;q) = sum q^(n(n+1)/2)
//   w:         w(q) = (q;q)(q^6;q^6)^3 / ((q^2;q^2)(q^3;q^3)^3)
//   xi:        xi(q) = 2 q w(q^3)
//   kappa:     kappa(q) = phi(-q)^4 / phi(-q^3)^4
enum class ThetaTag { phi_minus, psi, w, xi, kappa };

struct ThetaName {
    ThetaTag tag;
    long arg_power = 1; // evaluate at q^arg_power
};

// Truncated expansion with precision exactly as requested.  For phi_minus and
// psi the eta-quotient route is cross-checked against the sparse theta-sum
// expansion; disagreement would be an internal error and throws.
QSeries make_theta(const ThetaName& name, long precision);

QSeries phi_minus(long arg_power, long precision);
QSeries psi(long arg_power, long precision);
QSeries w_quotient(long arg_power, long precision);
QSeries xi_series(long arg_power, long precision);
QSeries kappa(long arg_power, long precision);

// Coefficientwise identity checks, each comparing both sides exactly on
// [valuation, precision) and reporting any mismatching exponents.

// psi(q^3)^3 / psi(q) = (1/8q) (phi(-q^3)^3/phi(-q) - phi(-q)^3/phi(-q^3))
CheckReport check_psi_cube_quotient(long precision);

// 1/psi(q) = (1/(8q psi(q^3)^3)) (phi(-q^9)^3/phi(-q^3)) (4xi - 2xi^2 + xi^3)
CheckReport check_psi_inverse_kernel(long precision);

// phi(-q) = phi(-q^9) (1 - xi)
CheckReport check_phi_dissection(long precision);

// 1/phi(-q) = (phi(-q^9)^3 / phi(-q^3)^4) (1 + xi + xi^2), plus the product
// of this with the previous identity collapsing to 1.
CheckReport check_phi_inverse_dissection(long precision);

// xi^3 = 1 - phi(-q^3)^4/phi(-q^9)^4, kappa = 1 - 8 q w(q)^3, and
// kappa ≡ 1 - xi (mod 3).
CheckReport check_xi_cube(long precision);

// All five in the order above (claims id2.1 .. id2.5).
std::vector<CheckReport> check_all_identities(long precision);

} // namespace qdissect
