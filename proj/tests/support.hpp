#pragma once

// Shared test helpers: independent combinatorial oracles (deliberately built
// on direct dynamic programs, not on the library's pentagonal-number fast
// paths) and randomized property checks reused by both the unit tests and
// the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "qdissect/qseries.hpp"

namespace qdissect::testing {

// Coefficients of prod_j 1/(1 - q^j)^mult(j) for n < precision, computed by
// the classic one-factor-at-a-time DP: multiplying by 1/(1 - q^j) is
// c[n] += c[n - j] in ascending order.
inline std::vector<BigInt> geometric_product_oracle(const std::vector<long>& factors,
                                                    long precision) {
    std::vector<BigInt> c(precision, 0);
    if (precision > 0) c[0] = 1;
    for (long j : factors)
        for (long n = j; n < precision; ++n) c[n] += c[n - j];
    return c;
}

// p(n): parts of every size.
inline std::vector<BigInt> oracle_partitions(long precision) {
    std::vector<long> f;
    for (long j = 1; j < precision; ++j) f.push_back(j);
    return geometric_product_oracle(f, precision);
}

// a(n): generating function 1/((q;q)(q^2;q^2)).
inline std::vector<BigInt> oracle_cubic(long precision) {
    std::vector<long> f;
    for (long j = 1; j < precision; ++j) {
        f.push_back(j);
        if (2 * j < precision) f.push_back(2 * j);
    }
    return geometric_product_oracle(f, precision);
}

// b(n): generating function 1/((q;q)^2 (q^2;q^2)^2).
inline std::vector<BigInt> oracle_cubic_pairs(long precision) {
    std::vector<long> f;
    for (long j = 1; j < precision; ++j) {
        f.push_back(j);
        f.push_back(j);
        if (2 * j < precision) {
            f.push_back(2 * j);
            f.push_back(2 * j);
        }
    }
    return geometric_product_oracle(f, precision);
}

// Count partitions of n by plain recursive enumeration (largest part first).
inline long enumerate_partitions(long n, long max_part) {
    if (n == 0) return 1;
    long count = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) count += enumerate_partitions(n - p, p);
    return count;
}

struct PropertyResult {
    int trials = 0;
    std::string failure; // empty on success
    bool ok() const { return failure.empty(); }
};

inline QSeries random_series(std::mt19937& rng) {
    std::uniform_int_distribution<long> val_d(-3, 3), len_d(1, 8), num_d(-9, 9), den_d(0, 3);
    long val = val_d(rng), len = len_d(rng);
    std::vector<Rational> w;
    for (long i = 0; i < len; ++i) {
        Rational c(num_d(rng), 1L << den_d(rng));
        c.canonicalize();
        w.push_back(c);
    }
    return QSeries(val, std::move(w), val + len);
}

inline PropertyResult prop_ring_laws(unsigned seed, int trials) {
    std::mt19937 rng(seed);
    PropertyResult res;
    for (res.trials = 0; res.trials < trials; ++res.trials) {
        QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        if (!agree_on_common_range((a + b) + c, a + (b + c))) {
            res.failure = "addition associativity";
            return res;
        }
        if (!agree_on_common_range(a * b, b * a)) {
            res.failure = "multiplication commutativity";
            return res;
        }
        if (!agree_on_common_range((a * b) * c, a * (b * c))) {
            res.failure = "multiplication associativity";
            return res;
        }
        if (!agree_on_common_range(a * (b + c), a * b + a * c)) {
            res.failure = "distributivity";
            return res;
        }
    }
    return res;
}

inline PropertyResult prop_mul_inverse(unsigned seed, int trials) {
    std::mt19937 rng(seed);
    PropertyResult res;
    for (res.trials = 0; res.trials < trials; ++res.trials) {
        QSeries a = random_series(rng);
        if (a.is_zero()) continue;
        QSeries inv = a.inverse();
        if (inv.valuation() != -a.valuation()) {
            res.failure = "inverse valuation";
            return res;
        }
        if (inv.precision() != a.precision() - 2 * a.valuation()) {
            res.failure = "inverse precision";
            return res;
        }
        if (!agree_on_common_range(a * inv, QSeries::one(a.precision() - a.valuation()))) {
            res.failure = "a * a^-1 != 1";
            return res;
        }
    }
    return res;
}

inline PropertyResult prop_extract_reassemble(unsigned seed, int trials) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> m_d(1, 4);
    PropertyResult res;
    for (res.trials = 0; res.trials < trials; ++res.trials) {
        QSeries a = random_series(rng);
        long m = m_d(rng);
        QSeries sum = QSeries::zero(a.precision());
        for (long r = 0; r < m; ++r)
            sum = sum + substitute_power(extract(a, m, r), m).shifted(r);
        if (!agree_on_common_range(sum, a)) {
            res.failure = "extract/substitute reassembly at m=" + std::to_string(m);
            return res;
        }
    }
    return res;
}

inline PropertyResult prop_eta_pow_consistency(long precision) {
    PropertyResult res;
    for (long m : {1L, 2L, 3L}) {
        for (long e : {2L, 3L, -1L, -4L}) {
            ++res.trials;
            if (!agree_on_common_range(eta(m, e, precision), eta_factor(m, precision).pow(e))) {
                res.failure = "eta(" + std::to_string(m) + ")^" + std::to_string(e) +
                              " sparse vs dense power";
                return res;
            }
        }
        ++res.trials;
        // Pentagonal expansion vs the literal finite product prod (1 - q^(m n)).
        QSeries prod = QSeries::one(precision);
        for (long n = 1; m * n < precision; ++n)
            prod = prod * (QSeries::one(precision) - QSeries::monomial(1, m * n, precision));
        if (!agree_on_common_range(prod, eta_factor(m, precision))) {
            res.failure = "pentagonal expansion vs finite product, m=" + std::to_string(m);
            return res;
        }
    }
    return res;
}

} // namespace qdissect::testing
