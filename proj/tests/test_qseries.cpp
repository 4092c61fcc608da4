#include "doctest.h"

#include <string>
#include <vector>

#include "qdissect/errors.hpp"
#include "qdissect/json_io.hpp"
#include "qdissect/qseries.hpp"
#include "support.hpp"

using namespace qdissect;

namespace {

QSeries from_ints(long valuation, std::vector<long> ints, long precision) {
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(precision - valuation));
    for (long v : ints) w.emplace_back(v);
    w.resize(static_cast<std::size_t>(precision - valuation));
    return QSeries(valuation, std::move(w), precision);
}

} // namespace

TEST_CASE("construction normalizes the window") {
    QSeries a = from_ints(1, {0, 0, 3, 5}, 5);
    CHECK(a.valuation() == 3);
    CHECK(a.precision() == 5);
    CHECK(a.window().size() == 2);

    QSeries z = from_ints(2, {0, 0}, 4);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 4);
    CHECK(z.precision() == 4);

    CHECK_THROWS_AS(QSeries(0, std::vector<Rational>(3), 2), Error);
}

TEST_CASE("coefficient access and bounds") {
    QSeries a = from_ints(-1, {2, 0, 7}, 2);
    CHECK(a.coeff(-1) == 2);
    CHECK(a.coeff(0) == 0);
    CHECK(a.coeff(1) == 7);
    CHECK(a.coeff(-5) == 0); // below the valuation: known zero
    CHECK_THROWS_AS(a.coeff(2), QueryBeyondPrecision);

    CHECK_THROWS_AS(QSeries::zero(3).coeff(3), QueryBeyondPrecision);
    CHECK(QSeries::zero(3).coeff(2) == 0);
}

TEST_CASE("precision propagation through arithmetic") {
    QSeries a = from_ints(0, {1, 1, 1}, 3);  // prec 3
    QSeries b = from_ints(1, {1}, 2);        // val 1, prec 2

    QSeries sum = a + b;
    CHECK(sum.precision() == 2);
    CHECK(sum.coeff(0) == 1);
    CHECK(sum.coeff(1) == 2);

    QSeries prod = a * b; // min(3 + 1, 2 + 0) = 2
    CHECK(prod.precision() == 2);
    CHECK(prod.valuation() == 1);
    CHECK(prod.coeff(1) == 1);

    QSeries c = from_ints(1, {1, 1, 1, 1}, 5);
    QSeries inv = c.inverse(); // val -1, prec 5 - 2 = 3
    CHECK(inv.valuation() == -1);
    CHECK(inv.precision() == 3);
    CHECK((c * inv).coeff(0) == 1);
    CHECK((c * inv).coeff(1) == 0);

    CHECK(a.shifted(4).valuation() == 4);
    CHECK(a.shifted(4).precision() == 7);
    CHECK(a.truncated(2).precision() == 2);
    CHECK_THROWS_AS(a.truncated(4), QueryBeyondPrecision);
}

TEST_CASE("geometric series inverse") {
    QSeries one_minus_q = from_ints(0, {1, -1}, 12);
    QSeries geo = one_minus_q.inverse();
    for (long n = 0; n < 12; ++n) CHECK(geo.coeff(n) == 1);
    CHECK_THROWS_AS(QSeries::zero(4).inverse(), ZeroLeadingCoefficient);
}

TEST_CASE("integer powers, including negative ones") {
    QSeries binom = from_ints(0, {1, 1}, 6);
    QSeries cube = binom.pow(3);
    CHECK(cube.coeff(0) == 1);
    CHECK(cube.coeff(1) == 3);
    CHECK(cube.coeff(2) == 3);
    CHECK(cube.coeff(3) == 1);
    CHECK(cube.coeff(4) == 0);

    // (q + q^2)^-2 = q^-2 (1 + q)^-2 = q^-2 - 2 q^-1 + 3 - 4q + ...
    QSeries shifted = from_ints(1, {1, 1}, 7);
    QSeries inv_sq = shifted.pow(-2);
    CHECK(inv_sq.valuation() == -2);
    CHECK(inv_sq.coeff(-2) == 1);
    CHECK(inv_sq.coeff(-1) == -2);
    CHECK(inv_sq.coeff(0) == 3);
    CHECK(inv_sq.coeff(1) == -4);

    CHECK(binom.pow(0).coeff(0) == 1);
}

TEST_CASE("pentagonal support and eta factors") {
    auto support = pentagonal_support(1, 13);
    REQUIRE(support.size() == 5);
    CHECK(support[0] == std::pair<long, int>{1, -1});
    CHECK(support[1] == std::pair<long, int>{2, -1});
    CHECK(support[2] == std::pair<long, int>{5, 1});
    CHECK(support[3] == std::pair<long, int>{7, 1});
    CHECK(support[4] == std::pair<long, int>{12, -1});

    QSeries e1 = eta_factor(1, 13);
    const long expected[13] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    for (long n = 0; n < 13; ++n) CHECK(e1.coeff(n) == expected[n]);

    // Multiplying by the factor and then dividing by it is the identity.
    QSeries a = from_ints(0, {3, 1, 4, 1, 5, 9, 2, 6}, 8);
    QSeries round_trip = mul_eta(mul_eta(a, 2, 3), 2, -3);
    CHECK(agree_on_common_range(a, round_trip));
    CHECK(round_trip.precision() == a.precision());
}

TEST_CASE("extract and substitute") {
    std::vector<Rational> w;
    for (long n = 0; n < 10; ++n) w.emplace_back(n);
    QSeries a(0, std::move(w), 10);

    QSeries part = extract(a, 3, 1);
    CHECK(part.precision() == 3); // ceil((10 - 1) / 3)
    CHECK(part.coeff(0) == 1);
    CHECK(part.coeff(1) == 4);
    CHECK(part.coeff(2) == 7);

    QSeries sub = substitute_power(part, 3);
    CHECK(sub.precision() == 9);
    CHECK(sub.coeff(3) == 4);
    CHECK(sub.coeff(4) == 0);

    // Extraction of a negative-valuation series keeps the floor right:
    // exponents -2, -1, 0, 1 with residue 1 mod 3 picks out q^-2 and q^1.
    QSeries lau = from_ints(-2, {5, 6, 7, 8}, 2);
    QSeries picked = extract(lau, 3, 1);
    CHECK(picked.valuation() == -1);
    CHECK(picked.coeff(-1) == 5);
    CHECK(picked.coeff(0) == 8);
}

TEST_CASE("modular reduction of exact coefficients") {
    QSeries a(0, {Rational(7, 8), Rational(-1)}, 2);
    QSeries reduced = reduce_mod(a, 2187);
    CHECK(reduced.coeff(0) == 821); // 8 * 821 = 6568 = 3 * 2187 + 7
    CHECK(reduced.coeff(1) == 2186);

    QSeries bad(0, {Rational(1), Rational(0), Rational(1, 3)}, 3);
    try {
        reduce_mod(bad, 9);
        FAIL("reduce_mod accepted a denominator sharing a factor with the modulus");
    } catch (const NonInvertibleDenominator& e) {
        CHECK(std::string(e.what()).find("q^2") != std::string::npos);
    }
}

TEST_CASE("json round trip") {
    QSeries a(-2, {Rational(7, 8), Rational(0), Rational(-3)}, 1);
    QSeries back = qseries_from_json(to_json(a));
    CHECK(back.valuation() == a.valuation());
    CHECK(back.precision() == a.precision());
    CHECK(agree_on_common_range(a, back));
    CHECK(back.coeff(-2) == Rational(7, 8));
}

TEST_CASE("ring laws on random series") {
    auto res = testing::prop_ring_laws(20260819, 300);
    INFO(res.failure);
    CHECK(res.ok());
    CHECK(res.trials == 300);
}

TEST_CASE("multiplicative inverses on random series") {
    auto res = testing::prop_mul_inverse(987654, 300);
    INFO(res.failure);
    CHECK(res.ok());
}

TEST_CASE("extract/substitute reassembly on random series") {
    auto res = testing::prop_extract_reassemble(424242, 300);
    INFO(res.failure);
    CHECK(res.ok());
}

TEST_CASE("eta power consistency") {
    auto res = testing::prop_eta_pow_consistency(60);
    INFO(res.failure);
    CHECK(res.ok());
}
