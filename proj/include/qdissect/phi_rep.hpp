#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdissect/qseries.hpp"

namespace qdissect {

// One summand v * phi(-q)^s * phi(-q^3)^t.
struct PhiTerm {
    long s;
    long t;
    Rational v;
};

// Tag for a representation whose weights were reduced modulo M: every
// coefficient is r / 2^scale_exp with r an integer residue in [0, M).
struct ReducedMod {
    BigInt modulus;
    long scale_exp;
};

/*
 * A theta-quotient representation
 *
 *     q^alpha / psi(q)^beta * sum_i v_i phi(-q)^(s_i) phi(-q^3)^(t_i)
 *
 * subject to the shape rules that make 3-dissection steps close up:
 * all s_i agree mod 4, all t_i agree mod 4, s_i + t_i is the same for every
 * term, beta >= 1, and every v_i has a power-of-two denominator.  Terms are
 * kept sorted by decreasing s, duplicates merged, zero coefficients dropped.
 * An empty term list is legal (everything cancelled, typically after modular
 * reduction) and still carries alpha and beta for bookkeeping.
 */
class PhiRep {
public:
    PhiRep(long alpha, long beta, std::vector<PhiTerm> terms,
           std::optional<ReducedMod> reduced = std::nullopt);

    long alpha() const { return alpha_; }
    long beta() const { return beta_; }
    const std::vector<PhiTerm>& terms() const { return terms_; }
    const std::optional<ReducedMod>& reduced() const { return reduced_; }
    bool empty() const { return terms_.empty(); }

    // beta mod 4, in [0, 4).
    long lambda_class() const { return mod_floor(beta_, 4); }
    // Common residues of s_i, t_i mod 4 and the common value s_i + t_i.
    // Throw EmptyRepresentation when there are no terms.
    long s_class() const;
    long t_class() const;
    long common_sum() const;

private:
    long alpha_;
    long beta_;
    std::vector<PhiTerm> terms_;
    std::optional<ReducedMod> reduced_;
};

// The two admissible classes for a dissection step: beta ≡ 0 (mod 4) with
// s ≡ t (mod 4), or beta ≡ 2 (mod 4) with s ≡ t + 2 (mod 4).
enum class Admissibility { balanced, offset, none };

Admissibility check_admissible(const PhiRep& rep);

// Seed representation of sum b(n) q^n = 1/((q;q)^2 (q^2;q^2)^2), namely
// phi(-q)^-2 / psi(q)^2.
PhiRep rep_for_b();

// Expand the representation as a series known below q^precision.
QSeries to_series(const PhiRep& rep, long precision);

// Smallest 3-adic valuation among the coefficient numerators; the power-of-two
// denominators never carry factors of 3.  Throws EmptyRepresentation.
long min_3adic_valuation(const PhiRep& rep);

// Reduce the weights mod M (M >= 2, odd): scale by the common power of two,
// take least nonnegative residues, drop terms that vanish.
PhiRep reduce_rep(const PhiRep& rep, const BigInt& M);

// Integer-coefficient view: q^alpha / (2^two_exponent psi(q)^beta) *
// sum_rows c phi(-q)^s phi(-q^3)^t, rows ordered by decreasing s.
struct DisplayRow {
    long s;
    long t;
    BigInt c;
};

struct DisplayRep {
    long alpha = 0;
    long two_exponent = 0;
    long beta = 0;
    BigInt modulus = 0; // 0 when exact
    std::vector<DisplayRow> rows;

    std::string to_text() const;
};

// Clear denominators (choosing the least power of two that makes every weight
// an integer) and optionally reduce the integer weights mod an odd modulus.
DisplayRep normalize_display(const PhiRep& rep, const BigInt& modulus = 0);

} // namespace qdissect
