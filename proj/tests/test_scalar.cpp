#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testutil;

TEST_CASE("rational construction and canonical form", "[scalar][rational]") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(numerator(rat(3, -6)) == BigInt(-1));
    CHECK(denominator(rat(3, -6)) == BigInt(2));
    CHECK(sign(rat(-1, 7)) == -1);
    CHECK(sign(Rational(0)) == 0);
    CHECK(to_string(rat(-5, 3)) == "-5/3");
    CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("rational parsing", "[scalar][rational]") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-22/7") == rat(-22, 7));
    CHECK(parse_rational("0.125") == rat(1, 8));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("factorials", "[scalar][rational]") {
    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(5) == BigInt(120));
    CHECK(factorial(12) == BigInt(479001600));
    CHECK(double_factorial(-1) == BigInt(1));
    CHECK(double_factorial(1) == BigInt(1));
    CHECK(double_factorial(5) == BigInt(15));
    CHECK(double_factorial(7) == BigInt(105));
}

TEST_CASE("quadratic field golden arithmetic", "[scalar][quadext]") {
    // (1 + sqrt2)(1 - sqrt2) = -1
    CHECK(q2(1, 1, 1, 1) * q2(1, 1, -1, 1) == QuadExt(Rational(-1)));
    // (1 + sqrt2)/(3 - sqrt2) = (5 + 4 sqrt2)/7
    CHECK(q2(1, 1, 1, 1) / q2(3, 1, -1, 1) == q2(5, 7, 4, 7));
    // (sqrt2)^2 = 2
    CHECK(QuadExt::sqrt_of(2) * QuadExt::sqrt_of(2) == QuadExt(Rational(2)));
    CHECK(q2(1, 1, 1, 1).galois_conj() == q2(1, 1, -1, 1));
    CHECK_THROWS_AS(q2(1, 1, 1, 1) / QuadExt(), DivisionError);
}

TEST_CASE("complex quadratic golden arithmetic", "[scalar][quadext][complex]") {
    // (i (1 - sqrt2))^2 = -(3 - 2 sqrt2)
    ComplexOf<QuadExt> z(QuadExt(), q2(1, 1, -1, 1));
    ComplexOf<QuadExt> sq = z * z;
    CHECK(sq.re == q2(-3, 1, 2, 1));
    CHECK(sq.im.is_zero());
}

TEST_CASE("quadratic field exact sign", "[scalar][quadext]") {
    CHECK(q2(1, 1, -1, 1).sgn() == -1);  // 1 - sqrt2 < 0
    CHECK(q2(3, 1, -2, 1).sgn() == 1);   // 3 - 2 sqrt2 > 0
    CHECK(q2(-3, 1, 2, 1).sgn() == -1);  // 2 sqrt2 - 3 < 0
    CHECK(QuadExt().sgn() == 0);
    CHECK(q2(0, 1, 1, 1).sgn() == 1);
    // sqrt2 is irrational: a + b sqrt2 = 0 forces a = b = 0.
    CHECK_FALSE(q2(141421356, 100000000, -1, 1).is_zero());
}

TEST_CASE("rational and quadratic values mix freely", "[scalar][quadext]") {
    QuadExt plain(rat(3, 2)); // carries no radical
    CHECK(plain.is_rational());
    CHECK(plain + QuadExt::sqrt_of(2) == q2(3, 2, 1, 1));
    CHECK(plain * QuadExt::sqrt_of(2) == q2(0, 1, 3, 2));
}

TEST_CASE("bigfloat basics", "[scalar][bigfloat]") {
    BigFloat one = BigFloat::from_int(1, 128);
    BigFloat three = BigFloat::from_int(3, 128);
    CHECK((one / three) * three == BigFloat::from_rational(rat(1, 1), 128));
    CHECK(BigFloat::from_rational(rat(1, 3), 256).sign() == 1);
    CHECK(BigFloat::from_int(-7, 64).sign() == -1);
    CHECK(BigFloat::from_int(0, 64).is_zero());
    CHECK(pow2(-10, 64) == BigFloat::from_rational(rat(1, 1024), 64));
    CHECK(ldexp2(BigFloat::from_int(3, 64), -1) == BigFloat::from_rational(rat(3, 2), 64));
    CHECK(abs(BigFloat::from_int(-5, 64)) == BigFloat::from_int(5, 64));

    BigFloat pi = BigFloat::pi(256);
    BigFloat ref = BigFloat::from_string("3.14159265358979323846264338327950288419716939937510582097", 256);
    CHECK(close2(pi, ref, -180, 256));
}

TEST_CASE("bigfloat string round trip", "[scalar][bigfloat]") {
    BigFloat v = BigFloat::from_rational(rat(-355, 113), 192);
    BigFloat back = BigFloat::from_string(v.to_string(60), 192);
    CHECK(close2(v, back, -160, 192));
    CHECK(BigFloat::from_string("2.5e3", 64) == BigFloat::from_int(2500, 64));
    CHECK(BigFloat::from_string("-0.125", 64) == BigFloat::from_rational(rat(-1, 8), 64));
}

TEST_CASE("bigfloat exponent and precision control", "[scalar][bigfloat]") {
    BigFloat v = pow2(100, 64);
    CHECK(v.exponent() == 101); // mpfr exponent convention: 2^100 in [2^100, 2^101)
    BigFloat w = BigFloat::pi(512).with_prec(64);
    CHECK(close2(w, BigFloat::pi(64), -60, 64));
}

TEST_CASE("complex arithmetic over each field", "[scalar][complex]") {
    ComplexOf<Rational> i = imaginary_unit<Rational>();
    CHECK(i * i == ComplexOf<Rational>(Rational(-1)));
    CHECK((-i) * i == ComplexOf<Rational>(Rational(1)));

    ComplexOf<Rational> z(rat(3, 1), rat(4, 1));
    CHECK(abs_bigfloat(z, 128) == BigFloat::from_int(5, 128));
    CHECK(abs_bigfloat(rat(-9, 2), 128) == BigFloat::from_rational(rat(9, 2), 128));

    ComplexOf<QuadExt> iq = imaginary_unit<QuadExt>();
    CHECK((iq * iq).re == QuadExt(Rational(-1)));

    ComplexOf<BigFloat> ib = imaginary_unit<BigFloat>();
    CHECK((ib * ib).re == BigFloat::from_int(-1));
}

TEST_CASE("scalar traits reflect field properties", "[scalar][traits]") {
    CHECK(scalar_traits<Rational>::exact);
    CHECK(scalar_traits<QuadExt>::exact);
    CHECK_FALSE(scalar_traits<BigFloat>::exact);
    CHECK(scalar_traits<Rational>::is_zero(Rational(0)));
    CHECK(scalar_traits<QuadExt>::from_rational(rat(3, 4)) == QuadExt(rat(3, 4)));
    CHECK(scalar_traits<Rational>::from_int(-3) == Rational(-3));
    CHECK(close2(scalar_traits<QuadExt>::to_bigfloat(q2(1, 1, 1, 1), 128),
                 BigFloat::from_string("2.41421356237309504880168872420969807", 128), -100, 128));
}
