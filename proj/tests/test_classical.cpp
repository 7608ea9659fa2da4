#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testutil;

namespace {

Polynomial<QuadExt> qpoly(std::vector<QuadExt> c) { return Polynomial<QuadExt>(std::move(c)); }

} // namespace

TEST_CASE("probabilists' Hermite goldens", "[classical][hermite]") {
    auto H = ClassicalFamily<Rational>::hermite();
    CHECK(H.P(0) == rpoly({1}));
    CHECK(H.P(1) == rpoly({0, 1}));
    CHECK(H.P(2) == rpoly({-1, 0, 1}));
    CHECK(H.P(3) == rpoly({0, -3, 0, 1}));
    CHECK(H.P(4) == rpoly({3, 0, -6, 0, 1}));
    CHECK(H.P(5) == rpoly({0, 15, 0, -10, 0, 1}));
    CHECK(H.P(6) == rpoly({-15, 0, 45, 0, -15, 0, 1}));
    CHECK(H.a(1) == Rational(1));
    CHECK(H.a(7) == Rational(7));
    CHECK(H.kind() == FamilyKind::hermite);
    CHECK_THROWS_AS(H.a(0), ConfigError);
    CHECK_THROWS_AS(H.P(-1), ConfigError);
}

TEST_CASE("monic first-kind Chebyshev goldens", "[classical][chebyshev]") {
    auto T = ClassicalFamily<QuadExt>::chebyshev1();
    QuadExt z{}, one{Rational(1)};
    CHECK(T.P(1) == qpoly({z, one}));
    CHECK(T.P(2) == qpoly({QuadExt(rat(-1, 2)), z, one}));
    CHECK(T.P(3) == qpoly({z, QuadExt(rat(-3, 4)), z, one}));
    CHECK(T.P(4) == qpoly({QuadExt(rat(1, 8)), z, QuadExt(Rational(-1)), z, one}));
    CHECK(T.a(1) == QuadExt(rat(1, 2)));
    CHECK(T.a(2) == QuadExt(rat(1, 4)));
    CHECK(T.a(9) == QuadExt(rat(1, 4)));
}

TEST_CASE("monic Chebyshev matches the classical normalization", "[classical][chebyshev]") {
    // P_n = 2^(1-n) T_n for n >= 1.
    auto Tm = ClassicalFamily<Rational>::chebyshev1();
    for (int n = 1; n <= 10; ++n) {
        Rational scale = rat(1, 1LL << (n - 1));
        CHECK(Tm.P(n) == scale * chebyshev_T(n));
    }
}

TEST_CASE("classical Chebyshev polynomials of both kinds", "[classical][chebyshev]") {
    CHECK(chebyshev_T(0) == rpoly({1}));
    CHECK(chebyshev_T(4) == rpoly({1, 0, -8, 0, 8}));
    CHECK(chebyshev_U(4) == rpoly({1, 0, -12, 0, 16}));
    CHECK(chebyshev_U(-1).is_zero());
    for (int n = 0; n <= 10; ++n) {
        CHECK(chebyshev_T(n).eval(Rational(1)) == Rational(1));
        CHECK(chebyshev_U(n).eval(Rational(1)) == Rational(n + 1));
    }
    // Pell-style identity: T_n(i) and U_(n-1)(i) generate Q(i, sqrt2)-data
    // used by the exact Chebyshev moment engine; check T_2(i) = -3, U_1(i) = 2i.
    CHECK(chebyshev_T(2).eval(ComplexOf<Rational>(Rational(0), Rational(1))) ==
          ComplexOf<Rational>(Rational(-3)));
    CHECK(chebyshev_U(1).eval(ComplexOf<Rational>(Rational(0), Rational(1))) ==
          ComplexOf<Rational>(Rational(0), Rational(2)));
}

TEST_CASE("three-term recurrence holds for both stock families", "[classical]") {
    auto H = ClassicalFamily<Rational>::hermite();
    for (int n = 1; n <= 15; ++n)
        CHECK(H.P(n + 1) == Polynomial<Rational>::x() * H.P(n) - H.a(n) * H.P(n - 1));
    auto T = ClassicalFamily<QuadExt>::chebyshev1();
    for (int n = 1; n <= 15; ++n)
        CHECK(T.P(n + 1) == Polynomial<QuadExt>::x() * T.P(n) - T.a(n) * T.P(n - 1));
}

TEST_CASE("symmetry: stock families alternate parity", "[classical]") {
    auto H = ClassicalFamily<Rational>::hermite();
    for (int n = 0; n <= 12; ++n) {
        CHECK(H.P(n).degree() == n);
        CHECK(H.P(n).is_monic());
        CHECK(H.P(n).parity() == (n % 2 == 0 ? Parity::even : Parity::odd));
    }
}

TEST_CASE("custom family from explicit recurrence coefficients", "[classical][custom]") {
    auto fam = ClassicalFamily<Rational>::custom({Rational(1), Rational(2)});
    CHECK(fam.kind() == FamilyKind::custom);
    CHECK(fam.P(2) == rpoly({-1, 0, 1}));
    CHECK(fam.P(3) == rpoly({0, -3, 0, 1}));
    CHECK_THROWS_AS(fam.a(3), ConfigError);   // coefficients exhausted
    CHECK_THROWS_AS(fam.P(4), ConfigError);   // needs a_3
    CHECK_THROWS_AS(ClassicalFamily<Rational>::custom({Rational(0)}).a(1), ConfigError);
}

TEST_CASE("family names", "[classical]") {
    CHECK(family_name(FamilyKind::hermite) == "hermite");
    CHECK(family_name(FamilyKind::chebyshev1) == "chebyshev1");
    CHECK(family_name(FamilyKind::custom) == "custom");
}

TEST_CASE("jacobi operator encodes the recurrence", "[classical][banded]") {
    auto H = ClassicalFamily<Rational>::hermite();
    auto J = jacobi_operator(H, 6);
    CHECK(J.size() == 6);
    for (int n = 0; n < 6; ++n) {
        CHECK(J.entry(n, n) == Rational(0));
        if (n + 1 < 6) CHECK(J.entry(n, n + 1) == Rational(1));
        if (n >= 1) CHECK(J.entry(n, n - 1) == Rational(n));
    }
    // Row n of J expresses x P_n in the family: apply and compare.
    std::vector<Polynomial<Rational>> ps;
    for (int n = 0; n < 6; ++n) ps.push_back(H.P(n));
    auto xps = J.apply(ps);
    for (int n = 0; n + 1 < 6; ++n)
        CHECK(xps[n] == Polynomial<Rational>::x() * H.P(n));
}
