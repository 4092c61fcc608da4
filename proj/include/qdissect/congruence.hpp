#pragma once

#include <cstdint>
#include <string>

#include "qdissect/check_report.hpp"
#include "qdissect/mod_series.hpp"
#include "qdissect/qseries.hpp"

namespace qdissect {

// The three generating functions under study:
//   gen_b: sum b(n) q^n = 1 / ((q;q)^2 (q^2;q^2)^2)   — pairs of cubic partitions
//   gen_a: sum a(n) q^n = 1 / ((q;q) (q^2;q^2))        — cubic partitions
//   gen_p: sum p(n) q^n = 1 / (q;q)                    — ordinary partitions
QSeries gen_b(long precision);
QSeries gen_a(long precision);
QSeries gen_p(long precision);

ModSeries gen_b_mod(long precision, std::uint64_t modulus);
ModSeries gen_a_mod(long precision, std::uint64_t modulus);
ModSeries gen_p_mod(long precision, std::uint64_t modulus);

// Check that every coefficient of q^(m*n + r) below `limit` vanishes mod
// `modulus`.  Violations are indexed by n (not by the exponent m*n + r).
CheckReport check_progression(const std::string& claim, const QSeries& series,
                              long m, long r, const BigInt& modulus, long limit);
CheckReport check_progression(const std::string& claim, const ModSeries& series,
                              long m, long r, long limit);

// Compare two series coefficientwise on exponents below `limit`, exactly when
// modulus == 0 and mod `modulus` otherwise.  Violations are indexed by the
// exponent and carry the residue (or exact difference) found there.
CheckReport check_congruence_identity(const std::string& claim, const QSeries& lhs,
                                      const QSeries& rhs, const BigInt& modulus,
                                      long limit);
CheckReport check_congruence_identity(const std::string& claim, const ModSeries& lhs,
                                      const ModSeries& rhs, long limit);

// sum a(3n+2) q^n = 3 (q^3;q^3)^3 (q^6;q^6)^3 / ((q;q)^4 (q^2;q^2)^4),
// checked exactly on [0, limit), plus a(3n+2) ≡ 0 (mod 3) on the same range.
CheckReport verify_chan_identity(long limit);

// The single deep coefficient: its exact value, its 3-adic valuation (exactly
// seven), and its full factorization.
CheckReport verify_b547();

// b(81 (7 (7n + k) + 4) + 7) ≡ 0 (mod 27) for k = 1..6 and n < n_limit,
// i.e. the six progressions 3969 n + (567 k + 331); plus one exact-vs-modular
// cross-check of the first member b(898).
CheckReport verify_lin_family_alpha0(long n_limit);

// The coefficients of (1 - x)^20 mod 9 against their frozen values.
CheckReport verify_poly_1_minus_x_20();

} // namespace qdissect
