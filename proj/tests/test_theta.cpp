#include "doctest.h"

#include <string>

#include "qdissect/congruence.hpp"
#include "qdissect/errors.hpp"
#include "qdissect/theta.hpp"

using namespace qdissect;

TEST_CASE("phi(-q) and its argument powers") {
    QSeries phi = phi_minus(1, 12);
    const long expected[12] = {1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0};
    for (long n = 0; n < 12; ++n) CHECK(phi.coeff(n) == expected[n]);

    QSeries phi3 = phi_minus(3, 30);
    for (long n = 0; n < 30; ++n)
        CHECK(phi3.coeff(n) == (n % 3 == 0 ? phi.coeff(n / 3) : 0));

    CHECK_THROWS_AS(phi_minus(0, 10), Error);
}

TEST_CASE("psi is supported on the triangular numbers") {
    QSeries s = psi(1, 25);
    for (long n = 0; n < 25; ++n) {
        bool triangular = false;
        for (long k = 0; k * (k + 1) / 2 <= n; ++k)
            if (k * (k + 1) / 2 == n) triangular = true;
        CHECK(s.coeff(n) == (triangular ? 1 : 0));
    }
}

TEST_CASE("w, xi and kappa expansions") {
    QSeries w = w_quotient(1, 8);
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == -1);
    CHECK(w.coeff(2) == 0);
    CHECK(w.coeff(3) == 2);

    QSeries xi = xi_series(1, 40);
    CHECK(xi.valuation() == 1);
    CHECK(xi.coeff(1) == 2);
    CHECK(xi.coeff(2) == 0);
    CHECK(xi.coeff(3) == 0);
    CHECK(xi.coeff(4) == -2); // 2 q w(q^3) = 2q - 2q^4 + ...
    CHECK(xi.precision() == 40);

    QSeries k = kappa(1, 10);
    CHECK(k.coeff(0) == 1);
    CHECK(k.coeff(1) == -8);
    CHECK(k.coeff(2) == 24);
    CHECK(k.coeff(3) == -24);
    CHECK(k.coeff(4) == -40);
}

TEST_CASE("make_theta dispatches on the tag") {
    CHECK(agree_on_common_range(make_theta({ThetaTag::psi, 2}, 30), psi(2, 30)));
    CHECK(agree_on_common_range(make_theta({ThetaTag::xi, 1}, 30), xi_series(1, 30)));
    CHECK(make_theta({ThetaTag::kappa, 1}, 10).coeff(1) == -8);
}

TEST_CASE("the five dissection identities hold") {
    auto reports = check_all_identities(150);
    REQUIRE(reports.size() == 5);
    const char* ids[5] = {"id2.1", "id2.2", "id2.3", "id2.4", "id2.5"};
    for (std::size_t i = 0; i < 5; ++i) {
        CAPTURE(reports[i].claim);
        CHECK(reports[i].claim == ids[i]);
        CHECK(reports[i].checked >= 150);
        CHECK(reports[i].passed());
        CHECK(reports[i].violations.empty());
    }
}

TEST_CASE("a corrupted right-hand side is caught at the right exponent") {
    // phi(-q) = phi(-q^9)(1 - xi) with an extra q added on the right
    const long P = 50;
    QSeries lhs = phi_minus(1, P);
    QSeries rhs = phi_minus(9, P) * (QSeries::one(P) - xi_series(1, P)) +
                  QSeries::monomial(1, 1, P);
    CheckReport report = check_congruence_identity("mutated", lhs, rhs, 0, P);
    CHECK_FALSE(report.passed());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].n == 1);
    CHECK(report.violations[0].value == "-1");
}
