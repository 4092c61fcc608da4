#include "qdissect/qseries.hpp"

#include <algorithm>
#include <utility>

namespace qdissect {

namespace {
const Rational kZero = 0;
} // namespace

QSeries::QSeries(long valuation, std::vector<Rational> coeffs, long precision)
    : val_(valuation), prec_(precision), coeffs_(std::move(coeffs)) {
    if (prec_ - val_ < 0 || static_cast<long>(coeffs_.size()) != prec_ - val_)
        throw Error("series window size must equal precision - valuation");
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = prec_;
    } else if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
}

QSeries QSeries::zero(long precision) {
    QSeries s;
    s.val_ = precision;
    s.prec_ = precision;
    return s;
}

QSeries QSeries::one(long precision) {
    return monomial(1, 0, precision);
}

QSeries QSeries::monomial(const Rational& c, long exponent, long precision) {
    if (c == 0 || exponent >= precision) return zero(precision);
    std::vector<Rational> w(precision - exponent);
    w[0] = c;
    return QSeries(exponent, std::move(w), precision);
}

const Rational& QSeries::coeff(long n) const {
    if (n >= prec_)
        throw QueryBeyondPrecision("coefficient of q^" + std::to_string(n) +
                                   " requested, but series is only known below q^" +
                                   std::to_string(prec_));
    if (n < val_) return kZero;
    return coeffs_[n - val_];
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

QSeries QSeries::shifted(long e) const {
    QSeries s(*this);
    s.val_ += e;
    s.prec_ += e;
    return s;
}

QSeries QSeries::truncated(long new_precision) const {
    if (new_precision > prec_)
        throw QueryBeyondPrecision("cannot extend precision from " + std::to_string(prec_) +
                                   " to " + std::to_string(new_precision));
    if (new_precision <= val_) return zero(new_precision);
    std::vector<Rational> w(coeffs_.begin(), coeffs_.begin() + (new_precision - val_));
    return QSeries(val_, std::move(w), new_precision);
}

QSeries QSeries::inverse() const {
    if (is_zero())
        throw ZeroLeadingCoefficient("cannot invert: series is zero to its precision");
    long len = prec_ - val_;
    std::vector<Rational> out(len);
    out[0] = Rational(1) / coeffs_[0];
    for (long n = 1; n < len; ++n) {
        Rational acc = 0;
        for (long k = 1; k <= n; ++k)
            if (coeffs_[k] != 0) acc += coeffs_[k] * out[n - k];
        out[n] = -acc * out[0];
    }
    return QSeries(-val_, std::move(out), len - val_);
}

QSeries QSeries::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    long len = prec_ - val_;
    if (k == 0) return one(len);
    if (is_zero()) return zero(k * prec_);
    // Strip the valuation so squaring preserves the relative precision, then
    // shift the exponent k * valuation back in at the end.
    QSeries base(0, coeffs_, len);
    QSeries acc = one(len);
    long e = k;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc.shifted(k * val_);
}

namespace {

QSeries add_impl(const QSeries& a, const QSeries& b, bool subtract) {
    long prec = std::min(a.precision(), b.precision());
    long val = std::min(a.valuation(), b.valuation());
    if (val >= prec) return QSeries::zero(prec);
    std::vector<Rational> out(prec - val);
    const auto& aw = a.window();
    for (long i = 0; i < static_cast<long>(aw.size()) && a.valuation() + i < prec; ++i)
        out[a.valuation() + i - val] = aw[i];
    const auto& bw = b.window();
    for (long i = 0; i < static_cast<long>(bw.size()) && b.valuation() + i < prec; ++i) {
        if (subtract)
            out[b.valuation() + i - val] -= bw[i];
        else
            out[b.valuation() + i - val] += bw[i];
    }
    return QSeries(val, std::move(out), prec);
}

} // namespace

QSeries operator+(const QSeries& a, const QSeries& b) { return add_impl(a, b, false); }
QSeries operator-(const QSeries& a, const QSeries& b) { return add_impl(a, b, true); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    if (a.is_zero() || b.is_zero()) return QSeries::zero(prec);
    long val = a.val_ + b.val_;
    long len = prec - val; // == min of the two window lengths
    std::vector<Rational> out(len);
    for (long i = 0; i < static_cast<long>(a.coeffs_.size()) && i < len; ++i) {
        if (a.coeffs_[i] == 0) continue;
        long jmax = std::min<long>(b.coeffs_.size(), len - i);
        for (long j = 0; j < jmax; ++j)
            if (b.coeffs_[j] != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QSeries(val, std::move(out), prec);
}

QSeries operator*(const Rational& c, const QSeries& a) {
    if (c == 0) return QSeries::zero(a.precision());
    QSeries s(a);
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

bool agree_on_common_range(const QSeries& a, const QSeries& b) {
    long prec = std::min(a.precision(), b.precision());
    for (long n = std::min(a.valuation(), b.valuation()); n < prec; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

std::vector<std::pair<long, int>> pentagonal_support(long m, long len) {
    std::vector<std::pair<long, int>> sup;
    for (long k = 1;; ++k) {
        long e1 = m * (k * (3 * k - 1) / 2);
        if (e1 >= len) break;
        int sign = (k % 2 == 0) ? +1 : -1;
        sup.emplace_back(e1, sign);
        long e2 = m * (k * (3 * k + 1) / 2);
        if (e2 < len) sup.emplace_back(e2, sign);
    }
    return sup;
}

namespace {

void sparse_mul_pass(std::vector<Rational>& w, const std::vector<std::pair<long, int>>& sup) {
    // In place, descending: w_new[n] = w[n] + sum_g sign_g w[n - g], and every
    // w[n - g] read is still an old value because g > 0.
    for (long n = static_cast<long>(w.size()) - 1; n >= 0; --n) {
        for (const auto& [g, sign] : sup) {
            if (g > n) break;
            if (w[n - g] == 0) continue;
            if (sign > 0)
                w[n] += w[n - g];
            else
                w[n] -= w[n - g];
        }
    }
}

void sparse_div_pass(std::vector<Rational>& w, const std::vector<std::pair<long, int>>& sup) {
    // In place, ascending: w_new[n] = w[n] - sum_g sign_g w_new[n - g].
    for (long n = 0; n < static_cast<long>(w.size()); ++n) {
        for (const auto& [g, sign] : sup) {
            if (g > n) break;
            if (w[n - g] == 0) continue;
            if (sign > 0)
                w[n] -= w[n - g];
            else
                w[n] += w[n - g];
        }
    }
}

} // namespace

QSeries eta_factor(long m, long precision) {
    if (m < 1) throw Error("eta factor needs m >= 1");
    if (precision <= 0) return QSeries::zero(precision);
    std::vector<Rational> w(precision);
    w[0] = 1;
    for (const auto& [g, sign] : pentagonal_support(m, precision)) w[g] = sign;
    return QSeries(0, std::move(w), precision);
}

QSeries mul_eta(const QSeries& a, long m, long e) {
    if (m < 1) throw Error("eta factor needs m >= 1");
    if (e == 0 || a.is_zero()) return a;
    auto sup = pentagonal_support(m, a.prec_ - a.val_);
    QSeries s(a);
    for (long i = 0; i < e; ++i) sparse_mul_pass(s.coeffs_, sup);
    for (long i = 0; i > e; --i) sparse_div_pass(s.coeffs_, sup);
    return s; // unit factor: valuation and precision survive untouched
}

QSeries eta(long m, long e, long precision) {
    return mul_eta(QSeries::one(precision), m, e);
}

QSeries extract(const QSeries& a, long m, long r) {
    if (m < 1) throw Error("extraction needs m >= 1");
    long prec_out = ceildiv(a.precision() - r, m);
    if (a.is_zero()) return QSeries::zero(prec_out);
    long e0 = a.valuation() + mod_floor(r - a.valuation(), m);
    long n0 = floordiv(e0 - r, m);
    std::vector<Rational> out;
    for (long e = e0; e < a.precision(); e += m) out.push_back(a.coeff(e));
    if (out.empty()) return QSeries::zero(prec_out);
    return QSeries(n0, std::move(out), prec_out);
}

QSeries substitute_power(const QSeries& a, long m) {
    if (m < 1) throw Error("substitution needs m >= 1");
    if (a.is_zero()) return QSeries::zero(m * a.precision());
    long len = a.precision() - a.valuation();
    std::vector<Rational> out(m * len);
    for (long i = 0; i < len; ++i) out[m * i] = a.window()[i];
    return QSeries(m * a.valuation(), std::move(out), m * a.precision());
}

QSeries reduce_mod(const QSeries& a, const BigInt& M) {
    if (M < 2) throw Error("modulus must be >= 2");
    if (a.is_zero()) return a;
    std::vector<Rational> out;
    out.reserve(a.window().size());
    for (long i = 0; i < static_cast<long>(a.window().size()); ++i) {
        const Rational& c = a.window()[i];
        if (gcd(denominator(c), M) != 1)
            throw NonInvertibleDenominator(
                "coefficient of q^" + std::to_string(a.valuation() + i) + " has denominator " +
                denominator(c).get_str() + ", not invertible mod " + M.get_str());
        out.emplace_back(mod_reduce(c, M));
    }
    return QSeries(a.valuation(), std::move(out), a.precision());
}

} // namespace qdissect
