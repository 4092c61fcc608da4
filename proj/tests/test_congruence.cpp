#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>

#include "qdissect/claims.hpp"
#include "qdissect/congruence.hpp"
#include "qdissect/errors.hpp"
#include "qdissect/json_io.hpp"
#include "qdissect/mod_series.hpp"
#include "support.hpp"

using namespace qdissect;

TEST_CASE("generating functions match the convolution oracles") {
    const long P = 120;
    QSeries b = gen_b(P), a = gen_a(P), p = gen_p(P);
    auto ob = testing::oracle_cubic_pairs(P);
    auto oa = testing::oracle_cubic(P);
    auto op = testing::oracle_partitions(P);
    for (long n = 0; n < P; ++n) {
        CAPTURE(n);
        CHECK(b.coeff(n) == ob[n]);
        CHECK(a.coeff(n) == oa[n]);
        CHECK(p.coeff(n) == op[n]);
    }
    // spot values, frozen
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(5) == 66);
    CHECK(p.coeff(4) == 5);
    CHECK(p.coeff(5) == 7);
    CHECK(p.coeff(6) == 11);
    CHECK(a.coeff(2) == 3);
    CHECK(a.coeff(4) == 9);

    // p(n) against independent exhaustive enumeration for small n
    for (long n = 0; n <= 18; ++n) CHECK(p.coeff(n) == testing::enumerate_partitions(n, n));
}

TEST_CASE("all first-family congruences hold on [0, 5000)") {
    const long P = 5000;
    QSeries b = gen_b(P), a = gen_a(P), p = gen_p(P);
    CHECK(check_progression("t", p, 5, 4, 5, P).passed());
    CHECK(check_progression("t", p, 7, 5, 7, P).passed());
    CHECK(check_progression("t", p, 11, 6, 11, P).passed());
    CHECK(check_progression("t", a, 3, 2, 3, P).passed());
    CHECK(check_progression("t", b, 5, 4, 5, P).passed());
    for (long i : {2L, 3L, 4L, 6L}) CHECK(check_progression("t", b, 7, i, 7, P).passed());
    CHECK(check_progression("t", b, 9, 7, 9, P).passed());
}

TEST_CASE("a failing progression reports the earliest witnesses") {
    CheckReport r = check_progression("t", gen_b(100), 3, 0, 3, 100);
    CHECK_FALSE(r.passed());
    REQUIRE(!r.violations.empty());
    CHECK(r.violations[0].n == 0);
    CHECK(r.violations[0].value == "1"); // b(0) = 1
    CHECK(r.violations.size() == CheckReport::kMaxViolations);
    CHECK(r.checked == 34);

    CHECK_THROWS_AS(check_progression("t", gen_b(10), 3, 0, 3, 11), QueryBeyondPrecision);
}

TEST_CASE("chan identity, exactly and as a congruence") {
    CheckReport r = verify_chan_identity(200);
    CHECK(r.passed());
    CHECK(r.modulus == 0);
    REQUIRE(r.progressions.size() == 1);
    CHECK(r.progressions[0] == std::pair<long, long>{3, 2});
    // first terms of sum a(3n+2) q^n: 3, 12, 36, 96, ...
    QSeries lhs = extract(gen_a(20), 3, 2);
    CHECK(lhs.coeff(0) == 3);
    CHECK(lhs.coeff(1) == 12);
}

TEST_CASE("mod backend agrees with exact-then-reduce") {
    const long P = 400;
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> mod_d(2, 1u << 30);
    for (int trial = 0; trial < 4; ++trial) {
        const std::uint64_t M = mod_d(rng) | 1; // odd keeps denominators invertible
        ModSeries direct = gen_b_mod(P, M);
        ModSeries via_exact = mod_series_of(gen_b(P), M);
        for (long n = 0; n < P; ++n) {
            CAPTURE(M);
            CAPTURE(n);
            REQUIRE(direct.at(n) == via_exact.at(n));
        }
    }
    // the three generators, one fixed modulus
    ModSeries a27 = gen_a_mod(P, 27), p27 = gen_p_mod(P, 27);
    QSeries a = gen_a(P), p = gen_p(P);
    for (long n = 0; n < P; ++n) {
        CHECK(a27.at(n) == mod_reduce(a.coeff(n), 27));
        CHECK(p27.at(n) == mod_reduce(p.coeff(n), 27));
    }
}

TEST_CASE("mod backend basics") {
    ModSeries s = ModSeries::one(10, 97);
    s.mul_eta(1, -1); // partition numbers mod 97
    CHECK(s.at(6) == 11);
    CHECK(s.at(9) == 30);
    CHECK_THROWS_AS(s.at(10), QueryBeyondPrecision);
    CHECK_THROWS_AS(ModSeries(5, 1), Error);

    ModSeries e = s.extracted(3, 1);
    CHECK(e.precision() == 3);
    CHECK(e.at(0) == 1);  // p(1)
    CHECK(e.at(1) == 5);  // p(4)
    CHECK(e.at(2) == 15); // p(7)

    ModSeries doubled = s.scaled(2);
    CHECK(doubled.at(9) == 60);

    CHECK_THROWS_AS(
        mod_series_of(QSeries(-1, {Rational(1), Rational(0), Rational(0), Rational(0)}, 3), 5),
        Error);
}

TEST_CASE("theorem-level checks at reduced ranges") {
    // mod 243 corollary at a moderate range, exact backend
    const long P = 3000;
    QSeries b = gen_b(P);
    CHECK(check_progression("t", b, 81, 61, 729, P).passed());
    CHECK(check_progression("t", b, 81, 61, 243, P).passed());

    // the deeper statement via the mod backend
    ModSeries b2187 = gen_b_mod(6000, 2187);
    CheckReport deep = check_progression("t", b2187, 243, 61, 6000);
    CHECK(deep.passed());
    CHECK(deep.checked == 25);
}

TEST_CASE("lin-family members and the two reduced identities") {
    CheckReport fam = verify_lin_family_alpha0(2);
    CHECK(fam.passed());
    CHECK(fam.checked == 13); // 6 progressions x 2 terms + 1 cross-check
    CHECK(fam.progressions.size() == 6);
    CHECK(fam.progressions[0] == std::pair<long, long>{3969, 898});

    RunConfig small;
    small.precision = 40;
    CheckReport lin2 = find_claim("th1.2-lin2").run(small);
    CHECK(lin2.passed());
    CHECK(lin2.modulus == 81);
    CheckReport lin3 = find_claim("th1.2-lin3").run(small);
    CHECK(lin3.passed());
}

TEST_CASE("the deep single coefficient and the polynomial table") {
    CheckReport deep = verify_b547();
    CHECK(deep.passed());
    CHECK(deep.checked == 3);

    CheckReport poly = verify_poly_1_minus_x_20();
    CHECK(poly.passed());
    CHECK(poly.checked == 21);
    CHECK(poly.modulus == 9);
}

TEST_CASE("report serialization") {
    CheckReport r = check_progression("zz-9", gen_b(100), 9, 7, 9, 100);
    nlohmann::json j = to_json(r);
    CHECK(j["claim"] == "zz-9");
    CHECK(j["modulus"] == "9");
    CHECK(j["progression"][0] == 9);
    CHECK(j["progression"][1] == 7);
    CHECK(j["status"] == "pass");
    CHECK(j["checked"] == 11);
    CHECK(j["violations"].empty());

    CheckReport identity;
    identity.claim = "x";
    identity.checked = 1;
    CHECK(to_json(identity)["progression"] == "identity");

    CheckReport multi = verify_lin_family_alpha0(1);
    nlohmann::json mj = to_json(multi);
    REQUIRE(mj["progression"].size() == 6);
    CHECK(mj["progression"][0][0] == 3969);
}

TEST_CASE("claim registry wiring") {
    CHECK(claim_registry().size() == 25);
    CHECK(find_claim("zz-5").id == "zz-5");
    CHECK_THROWS_AS(find_claim("no-such-claim"), UnknownClaim);

    RunConfig quick;
    quick.precision = 400;
    CheckReport r = find_claim("zz-5").run(quick);
    CHECK(r.passed());
    CHECK(r.checked == 80); // 5n+4 < 400

    // the golden-table claims are exact and fast; run two of them for real
    RunConfig none;
    CHECK(find_claim("golden-b3n1").run(none).passed());
    CheckReport g9 = find_claim("golden-b9n7").run(none);
    CHECK(g9.passed());
    CHECK(g9.checked == 5 + 14 + 3); // header fields + rows + side conditions

    RunConfig mutated;
    mutated.inject_mutation = true;
    CheckReport bad = find_claim("golden-b9n7").run(mutated);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].n == 0);
}
