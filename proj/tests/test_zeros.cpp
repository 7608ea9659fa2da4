#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testutil;

TEST_CASE("exact root finding certifies multiplicities by square-free parts",
          "[zeros]") {
    // (x - 1)^2 (x^2 + 1) = x^4 - 2x^3 + 2x^2 - 2x + 1
    Polynomial<Rational> p =
        rpoly({-1, 1}) * rpoly({-1, 1}) * rpoly({1, 0, 1});
    ZeroSet zs = find_roots(p, 256);
    CHECK(zs.method == RootMethod::exact_gcd);
    CHECK_FALSE(zs.cluster_fallback);
    REQUIRE(zs.roots.size() == 3);
    CHECK(zs.total_multiplicity() == 4);

    // Sorted by (re, im): -i, +i, then the double root at 1.
    CHECK(zs.roots[0].re.is_zero());
    CHECK(close2(zs.roots[0].im, BigFloat::from_int(-1, 256), -200));
    CHECK(zs.multiplicities[0] == 1);
    CHECK(zs.roots[1].re.is_zero());
    CHECK(close2(zs.roots[1].im, BigFloat::from_int(1, 256), -200));
    CHECK(zs.multiplicities[1] == 1);
    CHECK(zs.roots[2].im.is_zero());
    CHECK(close2(zs.roots[2].re, BigFloat::from_int(1, 256), -200));
    CHECK(zs.multiplicities[2] == 2);

    auto reals = zs.real_roots();
    REQUIRE(reals.size() == 1);
    CHECK(close2(reals[0], BigFloat::from_int(1, 256), -200));

    // Conjugate symmetry of the non-real pair.
    CHECK(close2(zs.roots[0].im + zs.roots[1].im, BigFloat::from_int(0, 256), -200));
}

TEST_CASE("root finding edge cases", "[zeros]") {
    CHECK_THROWS_AS(find_roots(Polynomial<Rational>(), 128), ConfigError);
    CHECK_THROWS_AS(find_roots(Polynomial<BigFloat>(), 128), ConfigError);

    ZeroSet c = find_roots(rpoly({7}), 128);
    CHECK(c.roots.empty());
    CHECK(c.total_multiplicity() == 0);

    ZeroSet lin = find_roots(rpoly({-3, 1}), 128); // x - 3
    REQUIRE(lin.roots.size() == 1);
    CHECK(close2(lin.roots[0].re, BigFloat::from_int(3, 128), -100, 128));
    CHECK(lin.roots[0].im.is_zero());

    // Zero roots deflate exactly: x^3 has the triple root 0.
    ZeroSet cube = find_roots(rpoly({0, 0, 0, 1}), 128);
    REQUIRE(cube.roots.size() == 1);
    CHECK(cube.roots[0].re.is_zero());
    CHECK(cube.multiplicities[0] == 3);
}

TEST_CASE("numeric route clusters a double root and flags the fallback",
          "[zeros][numeric]") {
    Polynomial<Rational> p =
        rpoly({-1, 1}) * rpoly({-1, 1}) * rpoly({1, 0, 1});
    ZeroSet zs = find_roots(to_bigfloat_poly(p, 320), 256);
    CHECK(zs.method == RootMethod::aberth);
    CHECK(zs.cluster_fallback);
    REQUIRE(zs.roots.size() == 3);
    CHECK(zs.total_multiplicity() == 4);
    CHECK(zs.multiplicities[2] == 2);
    CHECK(close2(zs.roots[2].re, BigFloat::from_int(1, 256), -90));
    CHECK(zs.roots[2].im.is_zero());
}

TEST_CASE("determinism: identical inputs give bitwise identical roots",
          "[zeros]") {
    auto fam = make_gauss_exact_family();
    Polynomial<Rational> r = fam.R(9);
    ZeroSet a = find_roots(r, 256);
    ZeroSet b = find_roots(r, 256);
    REQUIRE(a.roots.size() == b.roots.size());
    for (size_t k = 0; k < a.roots.size(); ++k) {
        CHECK(a.roots[k].re.to_string(60) == b.roots[k].re.to_string(60));
        CHECK(a.roots[k].im.to_string(60) == b.roots[k].im.to_string(60));
    }
}

TEST_CASE("kernel polynomial zeros: real, simple, interior", "[zeros]") {
    auto g = make_gauss_exact_family();
    auto c = make_cheb_exact_family();
    Christoffel gc(g);
    Christoffel cc(c);
    for (int n = 0; n <= 6; ++n) {
        auto rg = check_S_zero_structure(gc, n, 192);
        INFO("gauss n=" << n << " " << rg.detail);
        CHECK(rg.ok);
        CHECK(rg.real_ok);
        CHECK(rg.simple_ok);
        CHECK(rg.support_ok);

        auto rc = check_S_zero_structure(cc, n, 192);
        INFO("cheb n=" << n << " " << rc.detail);
        CHECK(rc.ok);
        if (n > 0) {
            // Bounded support: every zero strictly inside (-1, 1).
            for (const auto& z : rc.zeros.roots)
                CHECK(abs(z.re) < BigFloat::from_int(1, 192));
        }
    }
}

TEST_CASE("kernel polynomial zeros interlace", "[zeros]") {
    auto g = make_gauss_exact_family();
    auto c = make_cheb_exact_family();
    Christoffel gc(g);
    Christoffel cc(c);
    for (int n = 1; n <= 6; ++n) {
        auto ig = check_interlacing(gc, n, 192);
        CHECK(ig.ok);
        CHECK(ig.min_gap.sign() > 0);
        auto ic = check_interlacing(cc, n, 192);
        CHECK(ic.ok);
        CHECK(ic.min_gap.sign() > 0);
    }
}

TEST_CASE("constructed family zero profile: n real and one conjugate pair",
          "[zeros]") {
    auto g = make_gauss_exact_family();
    auto c = make_cheb_exact_family();
    for (int n : {2, 8}) {
        auto pg = R_multiplicity_profile(g, n, 256);
        CHECK(pg.used_exact);
        CHECK(pg.count_real(1) == n);
        CHECK(pg.count_complex(1) == 2);
        CHECK(pg.zeros.total_multiplicity() == n + 2);
        CHECK(pg.real_counts.size() == 1);   // nothing beyond multiplicity 1
        CHECK(pg.complex_counts.size() == 1);

        auto pc = R_multiplicity_profile(c, n, 256);
        CHECK(pc.count_real(1) == n);
        CHECK(pc.count_complex(1) == 2);
    }
    // Degree < 1: empty profile.
    auto p0 = R_multiplicity_profile(g, 0, 128);
    CHECK(p0.zeros.roots.empty());
    CHECK(p0.real_counts.empty());
}

TEST_CASE("interpolation constructor hits prescribed real zeros", "[zeros]") {
    // Golden: nodes {-1, 1} force the quadratic completion x^2 + 3.
    auto f = build_critical_poly<Rational>({Rational(-1), Rational(1)});
    CHECK(f == rpoly({-3, 0, 2, 0, 1}));
    CHECK(eval_at_i(derivative(f)) == ComplexOf<Rational>());

    // Empty node list: the convention x^2 + 1.
    CHECK(build_critical_poly<Rational>({}) == rpoly({1, 0, 1}));

    // Generic nodes: degree, monic, nodes are zeros, derivative constraint.
    std::vector<Rational> nodes{rat(-3, 2), Rational(0), rat(1, 3), Rational(2)};
    auto h = build_critical_poly(nodes);
    CHECK(h.degree() == 6);
    CHECK(h.leading() == Rational(1));
    for (const auto& node : nodes) CHECK(h.eval(node) == Rational(0));
    CHECK(eval_at_i(derivative(h)) == ComplexOf<Rational>());
    CHECK(eval_at_minus_i(derivative(h)) == ComplexOf<Rational>());
    // Exactly the prescribed real zeros: the completion quadratic stays
    // complex, so the real count equals the node count.
    CHECK(count_real_roots(h) == 4);

    // Works over the extension field too.
    auto q = build_critical_poly<QuadExt>({QuadExt::sqrt_of(2)});
    CHECK(q.degree() == 3);
    CHECK(q.eval(QuadExt::sqrt_of(2)).is_zero());
    CHECK(eval_at_i(derivative(q)) == ComplexOf<QuadExt>());

    CHECK_THROWS_AS(build_critical_poly<Rational>({Rational(1), Rational(1)}),
                    ConfigError);
}
