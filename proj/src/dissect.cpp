#include "qdissect/dissect.hpp"

#include <algorithm>
#include <array>

#include "qdissect/errors.hpp"

namespace qdissect {

/*
 * One 3-dissection step, done symbolically.
 *
 * Write A = phi(-q^3), B = phi(-q^9), xi = 2q w(q^3) with
 * w(q) = (q;q)(q^6;q^6)^3 / ((q^2;q^2)(q^3;q^3)^3).  The classical
 * dissection identities
 *
 *     phi(-q)   = B (1 - xi)
 *     1/phi(-q) = (B^3 / A^4) (1 + xi + xi^2)
 *     1/psi(q)  = (1 / (8q psi(q^3)^3)) (B^3 / A) (4 xi - 2 xi^2 + xi^3)
 *     xi^3      = 1 - A^4 / B^4
 *
 * turn q^alpha / psi(q)^beta * sum_i v_i phi(-q)^(s_i) phi(-q^3)^(t_i) into a
 * Laurent polynomial in q^3-objects times xi-powers.  All xi arithmetic
 * happens in the quotient ring
 *
 *     Z[y, 1/y][xi] / (xi^3 - (1 - y)),      y = A^4 / B^4,
 *
 * where (1 - xi)^-1 = (1 + xi + xi^2) / y, because (1-xi)(1+xi+xi^2) =
 * 1 - xi^3 = y.  Since xi = 2q w(q^3) is 2q times a power series in q^3,
 * collecting the xi^0 component of the product picks out exactly the
 * exponents congruent to alpha - beta mod 3 (each 1/psi contributes one
 * balancing q from the 1/8q prefactor), and replacing q^3 by q yields the
 * next representation with beta' = 3 beta.
 *
 * Everything is arranged over the integers: scaling the weights by the
 * common denominator 2^F makes every polynomial coefficient an integer, and
 * each 1/psi factor contributes 2^-3 (the 1/8 above), so the output scale is
 * 2^(F + 3 beta).  Because the whole step is integer-linear in the weights,
 * reducing them mod M commutes with stepping; when the input carries a
 * ReducedMod tag the polynomial arithmetic reduces mod M as it goes.
 */

namespace {

// Laurent polynomial in y with integer coefficients: c[i] is the coefficient
// of y^(off + i).
struct LPoly {
    long off = 0;
    std::vector<BigInt> c;

    bool is_zero() const { return c.empty(); }

    void trim() {
        std::size_t lead = 0;
        while (lead < c.size() && sgn(c[lead]) == 0) ++lead;
        std::size_t tail = c.size();
        while (tail > lead && sgn(c[tail - 1]) == 0) --tail;
        if (lead == tail) {
            c.clear();
            off = 0;
            return;
        }
        c.erase(c.begin() + static_cast<long>(tail), c.end());
        c.erase(c.begin(), c.begin() + static_cast<long>(lead));
        off += static_cast<long>(lead);
    }
};

void reduce_coeff(BigInt& x, const BigInt* mod) {
    if (!mod) return;
    x %= *mod;
    if (sgn(x) < 0) x += *mod;
}

// acc += k * y^shift * p
void add_scaled(LPoly& acc, const LPoly& p, const BigInt& k, long shift, const BigInt* mod) {
    if (p.is_zero() || sgn(k) == 0) return;
    long lo = p.off + shift;
    long hi = lo + static_cast<long>(p.c.size());
    if (acc.is_zero()) {
        acc.off = lo;
        acc.c.assign(hi - lo, BigInt(0));
    } else {
        long new_lo = std::min(acc.off, lo);
        long new_hi = std::max(acc.off + static_cast<long>(acc.c.size()), hi);
        if (new_lo != acc.off || new_hi != acc.off + static_cast<long>(acc.c.size())) {
            std::vector<BigInt> grown(new_hi - new_lo, BigInt(0));
            for (std::size_t i = 0; i < acc.c.size(); ++i)
                grown[acc.off - new_lo + static_cast<long>(i)] = acc.c[i];
            acc.c = std::move(grown);
            acc.off = new_lo;
        }
    }
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        BigInt& slot = acc.c[lo - acc.off + static_cast<long>(i)];
        slot += k * p.c[i];
        reduce_coeff(slot, mod);
    }
    acc.trim();
}

LPoly mul(const LPoly& a, const LPoly& b, const BigInt* mod) {
    LPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.off = a.off + b.off;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (sgn(b.c[j]) == 0) continue;
            BigInt& slot = r.c[i + j];
            slot += a.c[i] * b.c[j];
            reduce_coeff(slot, mod);
        }
    }
    r.trim();
    return r;
}

// (1 - y) * p
LPoly one_minus_y_times(const LPoly& p, const BigInt* mod) {
    LPoly r;
    add_scaled(r, p, BigInt(1), 0, mod);
    add_scaled(r, p, BigInt(-1), 1, mod);
    return r;
}

// Element of Z[y,1/y][xi] / (xi^3 - (1 - y)): components of xi^0, xi^1, xi^2.
using RElem = std::array<LPoly, 3>;

RElem rmul(const RElem& a, const RElem& b, const BigInt* mod) {
    // Raw xi-degree k coefficient, then xi^3 = 1 - y and xi^4 = (1 - y) xi.
    LPoly raw[5];
    for (int i = 0; i < 3; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (b[j].is_zero()) continue;
            LPoly prod = mul(a[i], b[j], mod);
            add_scaled(raw[i + j], prod, BigInt(1), 0, mod);
        }
    }
    RElem r;
    r[0] = raw[0];
    add_scaled(r[0], one_minus_y_times(raw[3], mod), BigInt(1), 0, mod);
    r[1] = raw[1];
    add_scaled(r[1], one_minus_y_times(raw[4], mod), BigInt(1), 0, mod);
    r[2] = raw[2];
    return r;
}

RElem r_one() {
    RElem e;
    e[0].c = {BigInt(1)};
    return e;
}

RElem rpow(RElem base, long k, const BigInt* mod) {
    RElem acc = r_one();
    while (k > 0) {
        if (k & 1) acc = rmul(acc, base, mod);
        k >>= 1;
        if (k) base = rmul(base, base, mod);
    }
    return acc;
}

// 1 - xi
RElem one_minus_xi() {
    RElem e;
    e[0].c = {BigInt(1)};
    e[1].c = {BigInt(-1)};
    return e;
}

// (1 - xi)^-1 = (1 + xi + xi^2) / y
RElem inv_one_minus_xi() {
    RElem e;
    for (int i = 0; i < 3; ++i) {
        e[i].off = -1;
        e[i].c = {BigInt(1)};
    }
    return e;
}

// 4 xi - 2 xi^2 + xi^3 = (1 - y) + 4 xi - 2 xi^2, the kernel each 1/psi
// factor contributes.
RElem psi_kernel() {
    RElem e;
    e[0].c = {BigInt(1), BigInt(-1)};
    e[1].c = {BigInt(4)};
    e[2].c = {BigInt(-2)};
    return e;
}

} // namespace

DissectStep dissect_step(const PhiRep& rep) {
    if (check_admissible(rep) == Admissibility::none)
        throw InadmissibleRepresentation(
            "dissection step needs beta ≡ 0 (mod 4) with s ≡ t, or beta ≡ 2 (mod 4) with "
            "s ≡ t + 2 (mod 4)");

    long ell = mod_floor(rep.alpha() - rep.beta(), 3);
    long alpha2 = (rep.alpha() - rep.beta() - ell) / 3;
    long beta2 = 3 * rep.beta();

    if (rep.empty()) {
        std::optional<ReducedMod> red = rep.reduced();
        if (red) red->scale_exp += 3 * rep.beta();
        return {static_cast<int>(ell), PhiRep(alpha2, beta2, {}, std::move(red))};
    }

    const BigInt* mod = nullptr;
    long F = 0;
    if (rep.reduced()) {
        mod = &rep.reduced()->modulus;
        F = rep.reduced()->scale_exp;
    } else {
        for (const auto& term : rep.terms())
            F = std::max(F, pow2_exponent(denominator(term.v)));
    }
    Rational scale(pow2_big(static_cast<unsigned long>(F)));

    // H = sum_i N_i y^(m_i) (1 - xi)^(s_i), rolled from the largest s down;
    // each drop of 4 in s multiplies by (1 - xi)^-4 and shifts y by one.
    const auto& terms = rep.terms();
    long s0 = terms.front().s;
    long t0 = terms.front().t;
    RElem carrier = s0 >= 0 ? rpow(one_minus_xi(), s0, mod) : rpow(inv_one_minus_xi(), -s0, mod);
    RElem down = rpow(inv_one_minus_xi(), 4, mod);
    RElem H;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        long m = (s0 - terms[i].s) / 4;
        BigInt N = numerator(terms[i].v * scale);
        for (int c = 0; c < 3; ++c) add_scaled(H[c], carrier[c], N, m, mod);
        if (i + 1 < terms.size()) {
            long gap = (terms[i].s - terms[i + 1].s) / 4;
            for (long g = 0; g < gap; ++g) carrier = rmul(carrier, down, mod);
        }
    }

    // Only the xi^0 component of H * K^beta is needed:
    // W = H0 K0 + (1 - y)(H1 K2 + H2 K1).
    RElem Kb = rpow(psi_kernel(), rep.beta(), mod);
    LPoly W = mul(H[0], Kb[0], mod);
    LPoly cross = mul(H[1], Kb[2], mod);
    add_scaled(cross, mul(H[2], Kb[1], mod), BigInt(1), 0, mod);
    add_scaled(W, one_minus_y_times(cross, mod), BigInt(1), 0, mod);

    // y^d contributes phi(-q)^(a0 + 4d) phi(-q^3)^(c0 - 4d) in the new
    // variable, anchored at (a0, c0) = (t0 - beta, s0 + 3 beta).
    long a0 = t0 - rep.beta();
    long c0 = s0 + 3 * rep.beta();
    long F2 = F + 3 * rep.beta();
    BigInt den2 = pow2_big(static_cast<unsigned long>(F2));
    std::vector<PhiTerm> out;
    for (long i = static_cast<long>(W.c.size()) - 1; i >= 0; --i) {
        if (sgn(W.c[i]) == 0) continue;
        long d = W.off + i;
        Rational v(W.c[i], den2);
        v.canonicalize();
        out.push_back({a0 + 4 * d, c0 - 4 * d, v});
    }

    std::optional<ReducedMod> red;
    if (mod) red = ReducedMod{*mod, F2};
    PhiRep next(alpha2, beta2, std::move(out), std::move(red));

    // The step must stay inside the class: s, t mod 4 preserved, common sum
    // grows by exactly 2 beta.
    if (!next.empty()) {
        if (next.s_class() != rep.s_class() || next.t_class() != rep.t_class() ||
            next.common_sum() != rep.common_sum() + 2 * rep.beta())
            throw Error("internal: dissection step left the exponent class");
    }
    return {static_cast<int>(ell), std::move(next)};
}

ChainResult dissect_chain(const PhiRep& start, long k, const BigInt& modulus) {
    if (k < 0) throw Error("chain length must be >= 0");
    if (modulus != 0 && (modulus < 2 || mpz_even_p(modulus.get_mpz_t()) != 0))
        throw Error("chain modulus must be odd and >= 2");
    ChainResult res;
    res.period = 1;
    res.offset = 0;
    PhiRep cur = start;
    for (long i = 0; i < k; ++i) {
        DissectStep step = dissect_step(cur);
        if (modulus != 0 && !step.rep.reduced()) step.rep = reduce_rep(step.rep, modulus);
        res.offset += step.ell * res.period;
        res.period *= 3;
        cur = step.rep;
        res.steps.push_back(std::move(step));
    }
    return res;
}

} // namespace qdissect
