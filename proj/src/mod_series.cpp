#include "qdissect/mod_series.hpp"

#include <cstdlib>

#include "qdissect/errors.hpp"

namespace qdissect {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b; // no wrap: both < 2^63
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace

ModSeries::ModSeries(long precision, std::uint64_t modulus) : modulus_(modulus) {
    if (precision < 0) throw Error("negative precision");
    if (modulus < 2 || modulus > kMaxModulus) throw Error("modulus must be in [2, 2^63)");
    coeffs_.assign(static_cast<std::size_t>(precision), 0);
}

ModSeries ModSeries::one(long precision, std::uint64_t modulus) {
    ModSeries s(precision, modulus);
    if (precision > 0) s.coeffs_[0] = 1 % modulus;
    return s;
}

std::uint64_t ModSeries::at(long n) const {
    if (n < 0) return 0;
    if (n >= precision())
        throw QueryBeyondPrecision("coefficient of q^" + std::to_string(n) +
                                   " requested but precision is " + std::to_string(precision()));
    return coeffs_[static_cast<std::size_t>(n)];
}

void ModSeries::mul_eta(long m, long e) {
    if (m < 1) throw Error("eta factor needs m >= 1");
    const long len = precision();
    const auto support = pentagonal_support(m, len);
    for (long pass = 0; pass < std::labs(e); ++pass) {
        if (e > 0) {
            for (long n = len - 1; n >= 0; --n) {
                std::uint64_t acc = coeffs_[static_cast<std::size_t>(n)];
                for (const auto& [expo, sign] : support) {
                    if (expo > n) break;
                    const std::uint64_t lower = coeffs_[static_cast<std::size_t>(n - expo)];
                    acc = sign > 0 ? add_mod(acc, lower, modulus_)
                                   : sub_mod(acc, lower, modulus_);
                }
                coeffs_[static_cast<std::size_t>(n)] = acc;
            }
        } else {
            for (long n = 0; n < len; ++n) {
                std::uint64_t acc = coeffs_[static_cast<std::size_t>(n)];
                for (const auto& [expo, sign] : support) {
                    if (expo > n) break;
                    const std::uint64_t lower = coeffs_[static_cast<std::size_t>(n - expo)];
                    acc = sign > 0 ? sub_mod(acc, lower, modulus_)
                                   : add_mod(acc, lower, modulus_);
                }
                coeffs_[static_cast<std::size_t>(n)] = acc;
            }
        }
    }
}

ModSeries ModSeries::extracted(long m, long r) const {
    if (m < 1 || r < 0) throw Error("extraction needs m >= 1 and r >= 0");
    long out_prec = ceildiv(precision() - r, m);
    if (out_prec < 0) out_prec = 0;
    ModSeries out(out_prec, modulus_);
    for (long n = 0; n < out_prec; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(m * n + r)];
    return out;
}

ModSeries ModSeries::scaled(std::uint64_t c) const {
    ModSeries out(precision(), modulus_);
    c %= modulus_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = mul_mod(coeffs_[i], c, modulus_);
    return out;
}

ModSeries mod_series_of(const QSeries& a, std::uint64_t modulus) {
    if (a.valuation() < 0 && !a.window().empty())
        throw Error("mod backend holds only series with valuation >= 0");
    ModSeries out(a.precision(), modulus);
    const BigInt m = static_cast<unsigned long>(modulus);
    for (long n = std::max(a.valuation(), 0L); n < a.precision(); ++n) {
        const BigInt residue = mod_reduce(a.coeff(n), m);
        out.coeffs_[static_cast<std::size_t>(n)] = residue.get_ui();
    }
    return out;
}

} // namespace qdissect
