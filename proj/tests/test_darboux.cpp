#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testutil;

TEST_CASE("banded operator basics", "[darboux][banded]") {
    BandedOperator<Rational> op(4, 1, 1);
    op.set(1, 0, Rational(5));
    op.set(1, 2, Rational(7));
    CHECK(op.entry(1, 0) == Rational(5));
    CHECK(op.entry(0, 3) == Rational(0));
    CHECK_THROWS_AS(op.set(0, 3, Rational(1)), ConfigError); // outside declared band
    CHECK_THROWS_AS(op.set(4, 0, Rational(1)), ConfigError); // outside truncation
    op.set(1, 0, Rational(0));                               // zero erases the entry
    CHECK(op.row(1).size() == 1);

    auto id = BandedOperator<Rational>::identity(3);
    CHECK(id.entry(2, 2) == Rational(1));
    CHECK(id.entry(2, 1) == Rational(0));
}

TEST_CASE("change-of-basis operator rows carry the construction coefficients",
          "[darboux]") {
    auto fam = make_gauss_exact_family();
    auto A = transform_A(fam, 10);
    CHECK(A.entry(0, 0) == Rational(1));
    for (int n = 1; n < 10; ++n) {
        CHECK(A.entry(n, n) == fam.A(n));
        if (n + 2 < 10) CHECK(A.entry(n, n + 2) == Rational(1));
        if (n >= 2) CHECK(A.entry(n, n - 2) == fam.B(n));
    }
    // Row n applied to the source family must reproduce R_n (away from the
    // clipped truncation edge).
    std::vector<Polynomial<Rational>> ps;
    for (int n = 0; n < 10; ++n) ps.push_back(fam.source().P(n));
    auto out = A.apply(ps);
    for (int n = 0; n + 2 < 10; ++n) CHECK(out[n] == fam.R(n));
}

TEST_CASE("inverse-direction operator rows expand the multiplied source family",
          "[darboux]") {
    auto fam = make_gauss_exact_family();
    Christoffel chr(fam);
    auto B = transform_B(chr, 12);
    Polynomial<Rational> phi = phi_multiplier<Rational>();
    // phi P_n = R_(n+2) + u_n R_n + v_n R_(n-2) with the operator's entries.
    for (int n = 0; n + 2 < 12; ++n) {
        Polynomial<Rational> rhs = fam.R(n + 2) + B.entry(n, n) * fam.R(n);
        if (n >= 2) rhs = rhs + B.entry(n, n - 2) * fam.R(n - 2);
        CHECK(phi * fam.source().P(n) == rhs);
    }
    // Worked-example coefficients for the gaussian instance.
    CHECK(B.entry(0, 0) == Rational(2));
    CHECK(B.entry(1, 1) == Rational(2));
    CHECK(B.entry(2, 2) == Rational(4));
    CHECK(B.entry(3, 3) == Rational(6));
    CHECK(B.entry(3, 1) == Rational(2));
    CHECK(B.entry(4, 4) == Rational(8));
    CHECK(B.entry(4, 2) == Rational(6));
}

TEST_CASE("inverse-direction worked coefficients for the chebyshev instance",
          "[darboux][chebyshev]") {
    auto fam = make_cheb_exact_family();
    Christoffel chr(fam);
    auto B = transform_B(chr, 10);
    Polynomial<QuadExt> phi = phi_multiplier<QuadExt>();
    for (int n = 0; n + 2 < 10; ++n) {
        Polynomial<QuadExt> rhs = fam.R(n + 2) + B.entry(n, n) * fam.R(n);
        if (n >= 2) rhs = rhs + B.entry(n, n - 2) * fam.R(n - 2);
        CHECK(phi * fam.source().P(n) == rhs);
    }
    CHECK(B.entry(0, 0) == q2(0, 1, 4, 3));        // (4/3) sqrt2
    CHECK(B.entry(1, 1) == q2(15, 28, 5, 28));     // 5/(12 - 4 sqrt2), rationalized
    CHECK(B.entry(2, 2) == q2(513, 1201, 288, 1201)); // 9/(57 - 32 sqrt2)
    CHECK(B.entry(3, 3) == q2(1, 2, 29, 100));
    CHECK(B.entry(3, 1) == q2(1, 112, 1, 336));    // (3 + sqrt2)/336
    CHECK(B.entry(4, 4) == q2(802, 1471, 480, 1471));
    CHECK(B.entry(4, 2) == q2(171, 19216, 96, 19216)); // 3(57 + 32 sqrt2)/19216
}

TEST_CASE("factorization: BA is the squared shifted Jacobi operator", "[darboux]") {
    auto g = make_gauss_exact_family();
    Christoffel gc(g);
    FactorizationReport grep = verify_factorization(gc, 12);
    CHECK(grep.ok);
    CHECK(grep.ba_matches);
    CHECK(grep.ab_matches);
    CHECK(grep.band_ok);
    CHECK(grep.ba_worst.is_zero());
    CHECK(grep.ab_worst.is_zero());

    auto c = make_cheb_exact_family();
    Christoffel cc(c);
    FactorizationReport crep = verify_factorization(cc, 12);
    CHECK(crep.ok);
    CHECK(crep.ba_worst.is_zero());
}

TEST_CASE("factorization holds numerically at 256 bits", "[darboux][numeric]") {
    auto fam = make_gauss_numeric_family(256);
    Christoffel chr(fam);
    FactorizationReport rep = verify_factorization(chr, 10, pow2(-96, 256));
    CHECK(rep.ok);
    CHECK(rep.ba_worst < pow2(-150, 256));
    CHECK(rep.ab_worst < pow2(-150, 256));
}

TEST_CASE("commuted product acts as multiplication by the kernel", "[darboux]") {
    auto fam = make_gauss_exact_family();
    Christoffel chr(fam);
    int size = 12;
    auto AB = transform_A(fam, size) * transform_B(chr, size);
    std::vector<Polynomial<Rational>> rs;
    for (int n = 0; n < size; ++n) rs.push_back(fam.R(n));
    auto image = AB.apply(rs);
    Polynomial<Rational> phi = phi_multiplier<Rational>();
    for (int n = 0; n + 4 < size; ++n) CHECK(image[n] == phi * fam.R(n));
}

TEST_CASE("general expansion in the constructed family", "[darboux]") {
    auto fam = make_gauss_exact_family();

    // psi = 1 + x + x^3/3 is admissible (psi' = 1 + x^2 kills +-i) and not
    // monic; the expansion occupies the full window n-3 .. n+3 (width 7).
    // Only 5 coefficients are nonzero: the even part of psi is the constant 1
    // (contributing index n alone), the odd part feeds n+-1 and n+-3, and the
    // n+-2 slots stay empty by parity.
    Polynomial<Rational> psi({Rational(1), Rational(1), Rational(0), rat(1, 3)});
    for (int n : {5, 8, 11}) {
        auto coeffs = general_recurrence(fam, psi, n);
        REQUIRE(!coeffs.empty());
        CHECK(coeffs.begin()->first == n - 3);
        CHECK(coeffs.rbegin()->first == n + 3);
        CHECK(coeffs.rbegin()->first - coeffs.begin()->first + 1 == 7);
        CHECK(coeffs.size() == 5);
        CHECK(coeffs.count(n - 2) == 0);
        CHECK(coeffs.count(n + 2) == 0);
        CHECK(coeffs.at(n + 3) == rat(1, 3)); // leading coefficient of psi
        Polynomial<Rational> recon;
        for (const auto& [m, v] : coeffs) recon = recon + v * fam.R(m);
        CHECK(recon == psi * fam.R(n));
    }

    // The kernel itself: phi R_n lives on {n-4 .. n+4} with unit leading entry.
    auto kc = general_recurrence(fam, phi_multiplier<Rational>(), 6);
    CHECK(kc.at(8) == Rational(1));
    Polynomial<Rational> recon;
    for (const auto& [m, v] : kc) recon = recon + v * fam.R(m);
    CHECK(recon == phi_multiplier<Rational>() * fam.R(6));

    // Inadmissible multipliers are rejected.
    CHECK_THROWS_AS(general_recurrence(fam, rpoly({0, 1}), 4), InvalidPsiError);
    CHECK_THROWS_AS(general_recurrence(fam, Polynomial<Rational>(), 4), InvalidPsiError);
    CHECK_THROWS_AS(general_recurrence(fam, psi, -1), ConfigError);
}
