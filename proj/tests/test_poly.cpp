#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testutil;

TEST_CASE("polynomial normalization and accessors", "[poly]") {
    Polynomial<Rational> p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0); // trailing zeros stripped
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(5) == Rational(0)); // out-of-range coefficients read as zero

    Polynomial<Rational> z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);

    CHECK(Polynomial<Rational>::x().degree() == 1);
    CHECK(Polynomial<Rational>::monomial(4, rat(3, 2)).coeff(4) == rat(3, 2));
    CHECK(Polynomial<Rational>::constant(Rational(7)).degree() == 0);
    CHECK(rpoly({0, 3, 0, 1}).is_monic());
    CHECK_FALSE(rpoly({1, 2}).is_monic());
    CHECK(rpoly({0, 3, 0, 2}).leading() == Rational(2));
}

TEST_CASE("polynomial parity detection", "[poly]") {
    CHECK(rpoly({0, 3, 0, 1}).parity() == Parity::odd);   // x^3 + 3x
    CHECK(rpoly({-1, 0, 2, 0, 1}).parity() == Parity::even); // x^4 + 2x^2 - 1
    CHECK(rpoly({1, 1}).parity() == Parity::none);
    CHECK(Polynomial<Rational>().parity() == Parity::even); // zero: even by convention
}

TEST_CASE("polynomial arithmetic goldens", "[poly]") {
    Polynomial<Rational> xp1 = rpoly({1, 1});
    CHECK(xp1 * xp1 == rpoly({1, 2, 1}));
    CHECK(rpoly({-1, 1}) * rpoly({1, 1}) == rpoly({-1, 0, 1}));
    CHECK(rpoly({1, 2, 3}) - rpoly({1, 2, 3}) == Polynomial<Rational>());
    CHECK(rat(1, 2) * rpoly({2, 4}) == rpoly({1, 2}));
    CHECK(-rpoly({1, -2}) == rpoly({-1, 2}));
}

TEST_CASE("derivative and complex-point evaluation", "[poly]") {
    Polynomial<Rational> p = rpoly({0, 3, 0, 1}); // x^3 + 3x
    CHECK(derivative(p) == rpoly({3, 0, 3}));     // 3x^2 + 3
    // Its derivative vanishes at +-i: the structural property everything
    // downstream depends on.
    ComplexOf<Rational> di = deriv_at_i(p);
    CHECK(di.re == Rational(0));
    CHECK(di.im == Rational(0));

    CHECK(eval_at_i(rpoly({1, 0, 1})) == ComplexOf<Rational>(Rational(0))); // (x^2+1)(i) = 0
    ComplexOf<Rational> v = eval_at_i(rpoly({2, 5})); // (5x + 2)(i) = 2 + 5i
    CHECK(v.re == Rational(2));
    CHECK(v.im == Rational(5));
    CHECK(eval_at_minus_i(rpoly({2, 5})).im == Rational(-5));

    CHECK(p.eval(rat(2, 1)) == Rational(14));
    CHECK(to_bigfloat_poly(p, 128).eval(BigFloat::from_int(2, 128)) ==
          BigFloat::from_int(14, 128));
}

TEST_CASE("psi basis polynomials have critical derivative at +-i", "[poly][moments]") {
    CHECK(psi_basis<Rational>(0) == rpoly({1}));
    CHECK(psi_basis<Rational>(1) == rpoly({0, 3, 0, 1}));       // x^3 + 3x
    CHECK(psi_basis<Rational>(2) == rpoly({0, 0, 2, 0, 1}));    // x^4 + 2x^2
    CHECK(psi_basis<Rational>(3) ==
          Polynomial<Rational>({Rational(0), Rational(0), Rational(0), rat(5, 3), Rational(0),
                                Rational(1)})); // x^5 + (5/3) x^3
    for (int k = 1; k <= 8; ++k) {
        ComplexOf<Rational> d = deriv_at_i(psi_basis<Rational>(k));
        CHECK(d.re == Rational(0));
        CHECK(d.im == Rational(0));
    }
    CHECK_THROWS_AS(psi_basis<Rational>(-1), ConfigError);
}

TEST_CASE("division goldens", "[poly]") {
    auto [q, r] = divmod(rpoly({1, 0, 0, 1}), rpoly({1, 1})); // (x^3+1)/(x+1)
    CHECK(q == rpoly({1, -1, 1}));
    CHECK(r.is_zero());

    CHECK(exact_divide(rpoly({1, 0, 0, 1}), rpoly({1, 1})) == rpoly({1, -1, 1}));
    CHECK_THROWS_AS(exact_divide(rpoly({1, 0, 0, 1}), rpoly({2, 1})), DivisionError);
    CHECK_THROWS_AS(divmod(rpoly({1}), Polynomial<Rational>()), DivisionError);

    // Non-monic divisor over an exact field.
    CHECK(exact_divide(rpoly({0, 2, 2}), rpoly({0, 2})) == rpoly({1, 1}));
}

TEST_CASE("coefficient-field conversions", "[poly]") {
    Polynomial<Rational> p = rpoly({1, 0, -3});
    Polynomial<BigFloat> pb = to_bigfloat_poly(p, 128);
    CHECK(pb.coeff(2) == BigFloat::from_int(-3, 128));
    CHECK(pb.degree() == 2);

    Polynomial<ComplexOf<Rational>> pc = complexify(p);
    CHECK(pc.coeff(0).re == Rational(1));
    CHECK(pc.coeff(0).im == Rational(0));

    Polynomial<QuadExt> pq = map_coeffs<QuadExt>(p, [](const Rational& v) { return QuadExt(v); });
    CHECK(pq.coeff(2) == QuadExt(Rational(-3)));

    CHECK(coeff_scale(p, 128) == BigFloat::from_int(3, 128));
    CHECK(coeff_scale(Polynomial<Rational>(), 128).is_zero());
}

TEST_CASE("pretty printing", "[poly]") {
    CHECK(rpoly({0, 3, 0, 1}).pretty() == "x^3 + 3x");
    CHECK(Polynomial<Rational>().pretty() == "0");
    CHECK(rpoly({1}).pretty() == "1");
    CHECK(rpoly({0, -5, 0, 0, 0, 1}).pretty() == "x^5 - 5x");
}
