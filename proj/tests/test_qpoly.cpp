#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecke/qpoly.hpp>

using hecke::LaurentPoly;
const auto v = LaurentPoly::v;

TEST_CASE("arithmetic cancels and normalizes") {
    LaurentPoly a = v(1) + 2 * v(-1);
    LaurentPoly b = v(1) - 2 * v(-1);
    CHECK(a * b == v(2) - 4 * v(-2));
    CHECK((a - a).is_zero());
    CHECK(a.min_deg() == -1);
    CHECK(a.max_deg() == 1);
    CHECK(a.coeff(0) == 0);
    CHECK(a.coeff(-1) == 2);
    CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("bar swaps v and v^-1") {
    CHECK((v(1) + 3 * v(-2)).bar() == v(-1) + 3 * v(2));
    auto q = hecke::quantum_int(3);
    CHECK(q.bar() == q);
}

TEST_CASE("evaluation at one") {
    CHECK((v(1) + v(2)).eval_one() == 2);
    CHECK((v(-1) - v(1)).eval_one() == 0);
    CHECK(hecke::quantum_factorial(4).eval_one() == 24);
}

TEST_CASE("membership in vN[v]") {
    CHECK(LaurentPoly().in_vN());
    CHECK((v(1) + 2 * v(3)).in_vN());
    CHECK_FALSE(LaurentPoly(1).in_vN());
    CHECK_FALSE((v(1) - v(2)).in_vN());
    CHECK_FALSE(v(-1).in_vN());
}

TEST_CASE("symmetric part at or below degree zero") {
    LaurentPoly x = v(-1) + 3 + 2 * v(1);
    CHECK(x.symmetric_part_at_or_below_zero() == v(-1) + 3 + v(1));
    // the remainder lies in vZ[v]
    auto rest = x - x.symmetric_part_at_or_below_zero();
    CHECK(rest.min_deg() >= 1);
}

TEST_CASE("exact division") {
    auto q2 = hecke::quantum_int(2), q3 = hecke::quantum_int(3);
    CHECK((q2 * q3).divexact(q3) == q2);
    CHECK_THROWS(q3.divexact(q2));
}

TEST_CASE("text round trip") {
    for (auto x : {LaurentPoly(), LaurentPoly(1), v(1), 2 * v(-3) - v(2) + 5, v(1) + v(2)}) {
        CAPTURE(x.str());
        CHECK(LaurentPoly::parse(x.str()) == x);
    }
    CHECK(LaurentPoly::parse("v^2+v") == v(1) + v(2));
    CHECK(LaurentPoly::parse("2v^-1") == 2 * v(-1));
}

TEST_CASE("overflow is reported") {
    LaurentPoly big = LaurentPoly(INT64_MAX);
    CHECK_THROWS_AS(big + 1, std::overflow_error);
    CHECK_THROWS_AS(big * 2, std::overflow_error);
}
