#include "qdissect/phi_rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qdissect/errors.hpp"

namespace qdissect {

PhiRep::PhiRep(long alpha, long beta, std::vector<PhiTerm> terms,
               std::optional<ReducedMod> reduced)
    : alpha_(alpha), beta_(beta), reduced_(std::move(reduced)) {
    if (beta_ < 1) throw Error("psi exponent beta must be >= 1");
    std::map<long, PhiTerm, std::greater<long>> merged;
    for (auto& term : terms) {
        auto [it, fresh] = merged.try_emplace(term.s, term);
        if (!fresh) {
            if (it->second.t != term.t) throw Error("terms with equal s must agree in t");
            it->second.v += term.v;
        }
    }
    for (auto& [s, term] : merged) {
        (void)s;
        if (term.v == 0) continue;
        terms_.push_back(term);
    }
    if (!terms_.empty()) {
        const PhiTerm& lead = terms_.front();
        for (const auto& term : terms_) {
            if (mod_floor(term.s, 4) != mod_floor(lead.s, 4) ||
                mod_floor(term.t, 4) != mod_floor(lead.t, 4))
                throw Error("term exponents must agree mod 4 across the sum");
            if (term.s + term.t != lead.s + lead.t)
                throw Error("s + t must be constant across the sum");
            if (pow2_exponent(denominator(term.v)) < 0)
                throw Error("coefficient denominators must be powers of two");
        }
    }
    if (reduced_) {
        if (reduced_->modulus < 2) throw Error("reduction modulus must be >= 2");
        if (mpz_even_p(reduced_->modulus.get_mpz_t()) != 0)
            throw Error("reduction modulus must be odd");
        if (reduced_->scale_exp < 0) throw Error("reduction scale exponent must be >= 0");
        Rational scale(pow2_big(static_cast<unsigned long>(reduced_->scale_exp)));
        for (const auto& term : terms_) {
            Rational scaled = term.v * scale;
            if (denominator(scaled) != 1 || sgn(numerator(scaled)) < 0 ||
                numerator(scaled) >= reduced_->modulus)
                throw Error("reduced weights must be residues in [0, M) over 2^scale_exp");
        }
    }
}

long PhiRep::s_class() const {
    if (empty()) throw EmptyRepresentation("no terms: s class undefined");
    return mod_floor(terms_.front().s, 4);
}

long PhiRep::t_class() const {
    if (empty()) throw EmptyRepresentation("no terms: t class undefined");
    return mod_floor(terms_.front().t, 4);
}

long PhiRep::common_sum() const {
    if (empty()) throw EmptyRepresentation("no terms: common s + t undefined");
    return terms_.front().s + terms_.front().t;
}

Admissibility check_admissible(const PhiRep& rep) {
    long lambda = rep.lambda_class();
    if (rep.empty()) {
        // Vacuously fine as long as beta sits in one of the two classes.
        if (lambda == 0) return Admissibility::balanced;
        if (lambda == 2) return Admissibility::offset;
        return Admissibility::none;
    }
    if (lambda == 0 && rep.s_class() == rep.t_class()) return Admissibility::balanced;
    if (lambda == 2 && rep.s_class() == mod_floor(rep.t_class() + 2, 4))
        return Admissibility::offset;
    return Admissibility::none;
}

PhiRep rep_for_b() {
    // 1/((q;q)^2 (q^2;q^2)^2) = phi(-q)^-2 / psi(q)^2.
    return PhiRep(0, 2, {{-2, 0, Rational(1)}});
}

namespace {

// phi(-q)^s phi(-q^3)^t with phi(-q^m) = (q^m;q^m)^2 / (q^2m;q^2m).
QSeries phi_power(long s, long t, long precision) {
    QSeries r = QSeries::one(precision);
    r = mul_eta(r, 1, 2 * s);
    r = mul_eta(r, 2, -s);
    r = mul_eta(r, 3, 2 * t);
    r = mul_eta(r, 6, -t);
    return r;
}

} // namespace

QSeries to_series(const PhiRep& rep, long precision) {
    long pi = precision - rep.alpha();
    if (pi <= 0 || rep.empty()) return QSeries::zero(precision);
    const auto& terms = rep.terms();
    QSeries cur = phi_power(terms[0].s, terms[0].t, pi);
    QSeries acc = terms[0].v * cur;
    QSeries ratio = QSeries::zero(0);
    if (terms.size() > 1) {
        // Successive terms differ by multiples of phi(-q^3)^4 / phi(-q)^4.
        ratio = phi_power(-4, 4, pi);
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
        long gap = (terms[i - 1].s - terms[i].s) / 4;
        for (long g = 0; g < gap; ++g) cur = cur * ratio;
        acc = acc + terms[i].v * cur;
    }
    // Divide by psi(q)^beta with psi(q) = (q^2;q^2)^2 / (q;q).
    acc = mul_eta(acc, 2, -2 * rep.beta());
    acc = mul_eta(acc, 1, rep.beta());
    return acc.shifted(rep.alpha());
}

long min_3adic_valuation(const PhiRep& rep) {
    if (rep.empty()) throw EmptyRepresentation("no terms: 3-adic valuation undefined");
    long best = -1;
    for (const auto& term : rep.terms()) {
        long v = valuation3(numerator(term.v));
        if (best < 0 || v < best) best = v;
    }
    return best;
}

PhiRep reduce_rep(const PhiRep& rep, const BigInt& M) {
    if (M < 2 || mpz_even_p(M.get_mpz_t()) != 0)
        throw Error("reduction modulus must be odd and >= 2");
    if (rep.reduced()) {
        if (rep.reduced()->modulus == M) return rep;
        if (rep.reduced()->modulus % M != 0)
            throw Error("representation already reduced mod " +
                        rep.reduced()->modulus.get_str() + "; cannot re-reduce mod " +
                        M.get_str());
    }
    long F = rep.reduced() ? rep.reduced()->scale_exp : 0;
    if (!rep.reduced())
        for (const auto& term : rep.terms())
            F = std::max(F, pow2_exponent(denominator(term.v)));
    Rational scale(pow2_big(static_cast<unsigned long>(F)));
    std::vector<PhiTerm> out;
    for (const auto& term : rep.terms()) {
        BigInt n = numerator(term.v * scale); // exact integer by choice of F
        n %= M;
        if (sgn(n) < 0) n += M;
        if (sgn(n) == 0) continue;
        Rational v(n, pow2_big(static_cast<unsigned long>(F)));
        v.canonicalize();
        out.push_back({term.s, term.t, v});
    }
    return PhiRep(rep.alpha(), rep.beta(), std::move(out), ReducedMod{M, F});
}

DisplayRep normalize_display(const PhiRep& rep, const BigInt& modulus) {
    if (modulus != 0 && (modulus < 2 || mpz_even_p(modulus.get_mpz_t()) != 0))
        throw Error("display modulus must be odd and >= 2");
    DisplayRep d;
    d.alpha = rep.alpha();
    d.beta = rep.beta();
    long F = 0;
    BigInt M = modulus;
    if (rep.reduced()) {
        F = rep.reduced()->scale_exp;
        if (M == 0)
            M = rep.reduced()->modulus;
        else if (M != rep.reduced()->modulus && rep.reduced()->modulus % M != 0)
            throw Error("display modulus must divide the stored reduction modulus");
    } else {
        for (const auto& term : rep.terms())
            F = std::max(F, pow2_exponent(denominator(term.v)));
    }
    d.two_exponent = F;
    d.modulus = M;
    Rational scale(pow2_big(static_cast<unsigned long>(F)));
    for (const auto& term : rep.terms()) {
        BigInt c = numerator(term.v * scale);
        if (M != 0) {
            c %= M;
            if (sgn(c) < 0) c += M;
            if (sgn(c) == 0) continue;
        }
        d.rows.push_back({term.s, term.t, c});
    }
    return d;
}

std::string DisplayRep::to_text() const {
    std::ostringstream out;
    out << "q^" << alpha << " / (";
    if (two_exponent != 0) out << "2^" << two_exponent << " ";
    out << "psi(q)^" << beta << ") * sum of:";
    if (modulus != 0) out << "   [mod " << modulus.get_str() << "]";
    out << '\n';
    if (rows.empty()) {
        out << "  (no terms: every coefficient vanished)\n";
        return out.str();
    }
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.c.get_str().size());
    for (const auto& row : rows) {
        std::string c = row.c.get_str();
        out << "  " << std::string(width - c.size(), ' ') << c;
        if (row.s != 0) out << "  phi(-q)^" << row.s;
        if (row.t != 0) out << "  phi(-q^3)^" << row.t;
        if (row.s == 0 && row.t == 0) out << "  1";
        out << '\n';
    }
    return out.str();
}

} // namespace qdissect
