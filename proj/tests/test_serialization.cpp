#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testutil;
using dekpoly::json;

TEST_CASE("scalar JSON shapes", "[serialization]") {
    json jr = scalar_json(rat(3, 4));
    CHECK(jr["kind"] == "rational");
    CHECK(jr["num"] == "3");
    CHECK(jr["den"] == "4");

    json jneg = scalar_json(rat(-22, 7));
    CHECK(jneg["num"] == "-22");
    CHECK(jneg["den"] == "7");

    json jq = scalar_json(q2(1, 1, -4, 3));
    CHECK(jq["kind"] == "quadext");
    CHECK(jq["a"]["num"] == "1");
    CHECK(jq["a"]["den"] == "1");
    CHECK(jq["b"]["num"] == "-4");
    CHECK(jq["b"]["den"] == "3");
    CHECK(jq["d"] == 2);

    json jb = scalar_json(BigFloat::from_int(5, 128));
    CHECK(jb["kind"] == "bigfloat");
    CHECK(jb["precision_bits"] == 128);
    std::string dec = jb["decimal"].get<std::string>();
    CHECK(dec.substr(0, 2) == "5.");

    json jz = scalar_json(ComplexOf<Rational>(Rational(0), Rational(2)));
    CHECK(jz["kind"] == "complex");
    CHECK(jz["re"]["num"] == "0");
    CHECK(jz["im"]["num"] == "2");
}

TEST_CASE("rational JSON values canonicalize", "[serialization]") {
    json jc = scalar_json(rat(2, 6));
    CHECK(jc["num"] == "1");
    CHECK(jc["den"] == "3");
    json jm = scalar_json(rat(5, -10)); // sign moves to the numerator
    CHECK(jm["num"] == "-1");
    CHECK(jm["den"] == "2");
}

TEST_CASE("polynomial JSON: low-to-high coefficients with a field tag",
          "[serialization]") {
    json jp = poly_json(rpoly({3, 0, 1})); // x^2 + 3
    CHECK(jp["field"] == "rational");
    REQUIRE(jp["coeffs"].size() == 3);
    CHECK(jp["coeffs"][0]["num"] == "3");
    CHECK(jp["coeffs"][1]["num"] == "0");
    CHECK(jp["coeffs"][2]["num"] == "1");

    json jq = poly_json(Polynomial<QuadExt>(
        std::vector<QuadExt>{q2(0, 1, 1, 1), QuadExt(Rational(1))}));
    CHECK(jq["field"] == "quadext");
    CHECK(jq["coeffs"][0]["b"]["num"] == "1");

    json jz = poly_json(Polynomial<Rational>()); // zero polynomial
    CHECK(jz["coeffs"].empty());
}

TEST_CASE("family descriptor JSON names the measure", "[serialization]") {
    auto g = make_gauss_exact_family();
    json jg = family_json(g.source(), 3);
    CHECK(jg["kind"] == "hermite");
    CHECK(jg["measure"]["name"] == "gauss");
    CHECK(jg["measure"]["weight"] == "exp(-x^2/2) dx on R");
    REQUIRE(jg["a"].size() == 3);
    CHECK(jg["a"][0]["num"] == "1");
    CHECK(jg["a"][1]["num"] == "2");
    CHECK(jg["a"][2]["num"] == "3");

    auto c = make_cheb_exact_family();
    json jc = family_json(c.source(), 2);
    CHECK(jc["kind"] == "chebyshev1");
    CHECK(jc["measure"]["name"] == "chebyshev1");
    // a_1 = 1/2, then a_n = 1/4
    CHECK(jc["a"][0]["a"]["den"] == "2");
    CHECK(jc["a"][1]["a"]["den"] == "4");
}

TEST_CASE("banded operator JSON is sparse triplets", "[serialization]") {
    auto id = BandedOperator<Rational>::identity(2);
    json j = operator_json(id);
    CHECK(j["size"] == 2);
    CHECK(j["low"] == 0);
    CHECK(j["high"] == 0);
    REQUIRE(j["triplets"].size() == 2);
    CHECK(j["triplets"][0][0] == 0);
    CHECK(j["triplets"][0][1] == 0);
    CHECK(j["triplets"][0][2]["num"] == "1");
    CHECK(j["triplets"][1][0] == 1);
    CHECK(j["triplets"][1][1] == 1);
}

TEST_CASE("zero-set CSV golden", "[serialization]") {
    CHECK(zeros_csv_header() == "poly_kind,n,re,im,multiplicity");

    ZeroSet zs;
    zs.kind = 'S';
    zs.n = 3;
    zs.roots = {ComplexOf<BigFloat>(BigFloat::from_int(0, 128), BigFloat::from_int(0, 128))};
    zs.multiplicities = {1};
    CHECK(zeros_csv(zs) == "poly_kind,n,re,im,multiplicity\nS,3,0,0,1\n");

    ZeroSet zr;
    zr.kind = 'R';
    zr.n = 1;
    zr.roots = {ComplexOf<BigFloat>(BigFloat::from_int(-2, 128), BigFloat::from_int(0, 128)),
                ComplexOf<BigFloat>(BigFloat::from_int(0, 128), BigFloat::from_int(1, 128))};
    zr.multiplicities = {1, 2};
    std::string csv = zeros_csv(zr);
    auto lines = std::vector<std::string>{};
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t nl = csv.find('\n', pos);
        lines.push_back(csv.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].substr(0, 8) == "R,1,-2.0");
    CHECK(lines[1].find("e0,0,1") != std::string::npos);
    CHECK(lines[2].substr(0, 6) == "R,1,0,");
    CHECK(lines[2].find(",2") == lines[2].size() - 2);
}

TEST_CASE("zero-set JSON carries method and precision", "[serialization]") {
    auto fam = make_gauss_exact_family();
    ZeroSet zs = find_roots(fam.R(2), 192);
    zs.kind = 'R';
    zs.n = 2;
    zs.family = "hermite";
    json j = zeros_json(zs);
    CHECK(j["family"] == "hermite");
    CHECK(j["poly_kind"] == "R");
    CHECK(j["n"] == 2);
    CHECK(j["method"] == "exact_gcd");
    CHECK(j["precision_bits"] == 192);
    CHECK(j["cluster_fallback"] == false);
    REQUIRE(j["roots"].size() == 4);
    CHECK(j["roots"][0]["multiplicity"] == 1);
    CHECK(j["roots"][0]["root"]["kind"] == "complex");
}

TEST_CASE("rational parsing from JSON values", "[serialization]") {
    CHECK(parse_rational(json(5)) == Rational(5));
    CHECK(parse_rational(json("3/4")) == rat(3, 4));
    CHECK(parse_rational(json("-7")) == Rational(-7));
    CHECK(parse_rational(json{{"num", "2"}, {"den", "6"}}) == rat(1, 3));
    CHECK_THROWS_AS(parse_rational(json("abc")), ConfigError);
    CHECK_THROWS_AS(parse_rational(json("1/0")), ConfigError);
    CHECK_THROWS_AS(parse_rational(json(json::array())), ConfigError);

    // Round trip through the serialized shape.
    CHECK(parse_rational(scalar_json(rat(-9, 14))) == rat(-9, 14));
}

TEST_CASE("custom family descriptor parsing", "[serialization]") {
    json good{{"kind", "custom"}, {"a", json::array({1, "1/2", json{{"num", "1"}, {"den", "4"}}})}};
    auto a = parse_custom_family(good);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == Rational(1));
    CHECK(a[1] == rat(1, 2));
    CHECK(a[2] == rat(1, 4));

    CHECK_THROWS_AS(parse_custom_family(json{{"kind", "custom"}}), ConfigError);
    CHECK_THROWS_AS(parse_custom_family(json{{"a", json::array()}}), ConfigError);
}
