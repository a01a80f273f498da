#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/series.hpp"
#include "support.hpp"

using namespace padic;
using namespace padic::testsupport;

TEST_CASE("KScalar normalization and precision") {
    ConfigPtr cfg = make_config(Int(5), 1, 3, 8);  // full precision 24
    // p * pi^{-3} is 1 for E = X^3 - 5
    KScalar x(OKScalar::from_int(cfg, 5), 3, cfg->uk_prec());
    CHECK(x.shift() == 0);
    CHECK((x - KScalar::one(cfg)).is_zero_to_prec());
    // 1/p has shift e and costs 2e digits of certified precision
    KScalar invp = KScalar::from_int(cfg, 5).inverse();
    CHECK(invp.shift() == 3);
    CHECK(invp.abs_prec() == cfg->uk_prec() - 6);
    CHECK((invp * KScalar::from_int(cfg, 5) - KScalar::one(cfg)).is_zero_to_prec());
    CHECK(invp.vlow() == -3);
    // inverse of a unit keeps full precision
    CHECK(KScalar::from_int(cfg, 2).inverse().abs_prec() == cfg->uk_prec());
    CHECK_THROWS_AS(KScalar::zero(cfg).inverse(), NotAUnit);
}

TEST_CASE("KScalar exhaustion throws") {
    ConfigPtr cfg = make_config(Int(5), 1, 1, 2);
    CHECK_THROWS_AS(KScalar::from_int(cfg, 5).inverse(), PrecisionExhausted);
}

TEST_CASE("compose examples") {
    ConfigPtr cfg = make_config(Int(5), 1, 1, 12);
    const int N = 8;
    std::mt19937_64 gen(11);
    TruncSeries1 X = TruncSeries1::identity(cfg, N);
    TruncSeries1 s = random_series(cfg, N, gen, false);
    // compose(s, X) = s
    TruncSeries1 sx = compose(s, X);
    CHECK((sx - s).is_zero_to_prec());
    // compose(aX, bX) = abX
    TruncSeries1 a3 = TruncSeries1::from_ints(cfg, N, {Int(3)});
    TruncSeries1 b7 = TruncSeries1::from_ints(cfg, N, {Int(7)});
    TruncSeries1 ab = compose(a3, b7);
    CHECK((ab.coeff(1) - KScalar::from_int(cfg, 21)).is_zero_to_prec());
    for (int i = 2; i <= N; ++i) CHECK(ab.coeff(i).is_zero_to_prec());
    // compose(X+X^2, X+X^2) = X + 2X^2 + 2X^3 + X^4, frozen from the
    // expansion oracle
    TruncSeries1 q = TruncSeries1::from_ints(cfg, N, {Int(1), Int(1)});
    TruncSeries1 qq = compose(q, q);
    ZPoly oracle = zp_compose({Int(0), Int(1), Int(1)}, {Int(0), Int(1), Int(1)});
    CHECK(oracle == ZPoly{Int(0), Int(1), Int(2), Int(2), Int(1)});
    CHECK(matches_zpoly(qq, oracle));
}

TEST_CASE("comp_inverse examples") {
    ConfigPtr cfg5 = make_config(Int(5), 1, 1, 12);
    const int N = 8;
    TruncSeries1 X = TruncSeries1::identity(cfg5, N);
    CHECK((comp_inverse(X) - X).is_zero_to_prec());

    // comp_inverse(2X) = (1/2)X over Z_5
    TruncSeries1 two_x = TruncSeries1::from_ints(cfg5, N, {Int(2)});
    TruncSeries1 inv2x = comp_inverse(two_x);
    CHECK((compose(two_x, inv2x) - X).is_zero_to_prec());
    // ... but 2 is not a unit over Z_2
    ConfigPtr cfg2 = make_config(Int(2), 1, 1, 12);
    TruncSeries1 two_x2 = TruncSeries1::from_ints(cfg2, N, {Int(2)});
    CHECK_THROWS_AS(comp_inverse(two_x2), NotInvertible);

    // comp_inverse(X+X^2): signed Catalan numbers, frozen and
    // cross-checked against binomial-formula Catalan numbers
    TruncSeries1 q = TruncSeries1::from_ints(cfg5, N, {Int(1), Int(1)});
    TruncSeries1 qi = comp_inverse(q);
    std::vector<Int> expected{Int(1), Int(-1), Int(2), Int(-5), Int(14), Int(-42), Int(132), Int(-429)};
    for (int m = 1; m <= N; ++m) {
        Int catalan;
        mpz_bin_uiui(catalan.get_mpz_t(), static_cast<unsigned long>(2 * (m - 1)),
                     static_cast<unsigned long>(m - 1));
        catalan /= m;
        if (m % 2 == 0) catalan = -catalan;
        CHECK(catalan == expected[static_cast<size_t>(m - 1)]);
        CHECK((qi.coeff(m) - KScalar::from_int(cfg5, catalan)).is_zero_to_prec());
    }
}

TEST_CASE("weierstrass degree") {
    ConfigPtr cfg = make_config(Int(5), 1, 1, 10);
    const int N = 10;
    std::vector<Int> f_coeffs(N, Int(0));
    f_coeffs[0] = 5;
    f_coeffs[4] = 1;  // f = 5X + X^5
    TruncSeries1 f = TruncSeries1::from_ints(cfg, N, f_coeffs);
    CHECK(weierstrass_degree(f) == 5);
    CHECK(weierstrass_degree(TruncSeries1::identity(cfg, N)) == 1);
    TruncSeries1 px = TruncSeries1::from_ints(cfg, N, {Int(5)});
    CHECK(!weierstrass_degree(px).has_value());
}

TEST_CASE("derivative") {
    ConfigPtr cfg = make_config(Int(5), 1, 1, 10);
    const int N = 6;
    TruncSeries1 X = TruncSeries1::identity(cfg, N);
    DerivativeResult d = derivative(X);
    CHECK((d.at_zero - KScalar::one(cfg)).is_zero_to_prec());
    CHECK(d.tail.is_zero_to_prec());

    std::vector<Int> fc(static_cast<size_t>(N), Int(0));
    fc[0] = 5;
    fc[4] = 1;
    TruncSeries1 f = TruncSeries1::from_ints(cfg, N, fc);
    CHECK((derivative(f).at_zero - KScalar::from_int(cfg, 5)).is_zero_to_prec());

    // termwise rule on K coefficients: X - X^2/2 + X^3/3
    std::vector<KScalar> cs(3, KScalar::zero(cfg));
    cs[0] = KScalar::one(cfg);
    cs[1] = -KScalar::from_int(cfg, 2).inverse();
    cs[2] = KScalar::from_int(cfg, 3).inverse();
    TruncSeries1 s(cfg, 3, cs);
    DerivativeResult ds = derivative(s);
    CHECK((ds.at_zero - KScalar::one(cfg)).is_zero_to_prec());
    CHECK((ds.tail.coeff(1) + KScalar::one(cfg)).is_zero_to_prec());
    CHECK((ds.tail.coeff(2) - KScalar::one(cfg)).is_zero_to_prec());
}

TEST_CASE("two-variable substitution") {
    ConfigPtr cfg = make_config(Int(3), 1, 1, 12);
    const int N = 8;
    std::mt19937_64 gen(5);
    TruncSeries1 s = random_series(cfg, N, gen, false);
    // F = X + Y: subst2(F, s, s) = 2s
    TruncSeries2 sum = TruncSeries2::from_pure_parts(TruncSeries1::identity(cfg, N),
                                                     TruncSeries1::identity(cfg, N));
    TruncSeries1 twice = subst2(sum, s, s);
    CHECK((twice - s.scaled_int(2)).is_zero_to_prec());

    // F = X + Y + XY: identity substitution returns F
    TruncSeries2 mult = sum;
    mult.set_coeff(1, 1, KScalar::one(cfg));
    TruncSeries2 back = subst2_diag(mult, TruncSeries1::identity(cfg, N), TruncSeries1::identity(cfg, N));
    CHECK((back - mult).is_zero_to_prec());

    // subst2_outer((1+X)^p - 1, X+Y+XY) = (1+X)^p (1+Y)^p - 1: binomial
    // product oracle
    TruncSeries1 f = binomial_series(cfg, N, Int(3));
    TruncSeries2 out = subst2_outer(f, mult);
    for (int d = 1; d <= N; ++d)
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            Int expect(0);
            if (i <= 3 && j <= 3) {
                Int bi, bj;
                mpz_bin_uiui(bi.get_mpz_t(), 3, static_cast<unsigned long>(i));
                mpz_bin_uiui(bj.get_mpz_t(), 3, static_cast<unsigned long>(j));
                expect = bi * bj;
            }
            CHECK((out.coeff(i, j) - KScalar::from_int(cfg, expect)).is_zero_to_prec());
        }
}

TEST_CASE("composition is associative on random triples") {
    std::mt19937_64 gen(123);
    for (ConfigPtr cfg :
         {make_config(Int(5), 1, 1, 10), make_config(Int(3), 1, 2, 6), make_config(Int(2), 2, 1, 10)}) {
        for (int trial = 0; trial < 40; ++trial) {
            TruncSeries1 a = random_series(cfg, 7, gen, false);
            TruncSeries1 b = random_series(cfg, 7, gen, false);
            TruncSeries1 c = random_series(cfg, 7, gen, false);
            CHECK((compose(compose(a, b), c) - compose(a, compose(b, c))).is_zero_to_prec());
        }
    }
}

TEST_CASE("comp_inverse round trips both ways") {
    std::mt19937_64 gen(321);
    for (ConfigPtr cfg : {make_config(Int(5), 1, 1, 10), make_config(Int(3), 1, 2, 8)}) {
        TruncSeries1 X = TruncSeries1::identity(cfg, 8);
        for (int trial = 0; trial < 40; ++trial) {
            TruncSeries1 s = random_series(cfg, 8, gen, true);
            TruncSeries1 t = comp_inverse(s);
            CHECK((compose(s, t) - X).is_zero_to_prec());
            CHECK((compose(t, s) - X).is_zero_to_prec());
        }
    }
}

TEST_CASE("weierstrass degree is multiplicative under composition") {
    std::mt19937_64 gen(99);
    ConfigPtr cfg = make_config(Int(3), 1, 1, 10);
    const int N = 30;
    int checked = 0;
    while (checked < 50) {
        TruncSeries1 s = random_series(cfg, N, gen, false);
        TruncSeries1 t = random_series(cfg, N, gen, false);
        auto ws = weierstrass_degree(s), wt = weierstrass_degree(t);
        if (!ws || !wt || *ws * *wt > N) continue;
        CHECK(weierstrass_degree(compose(s, t)) == *ws * *wt);
        ++checked;
    }
}

TEST_CASE("linear coefficient of a composition is the product") {
    std::mt19937_64 gen(7);
    ConfigPtr cfg = make_config(Int(5), 1, 3, 6);
    for (int trial = 0; trial < 40; ++trial) {
        TruncSeries1 s = random_series(cfg, 5, gen, false);
        TruncSeries1 t = random_series(cfg, 5, gen, false);
        KScalar expect = s.coeff(1) * t.coeff(1);
        CHECK((compose(s, t).coeff(1) - expect).is_zero_to_prec());
    }
}

TEST_CASE("series config mismatch") {
    ConfigPtr a = make_config(Int(5), 1, 1, 8);
    ConfigPtr b = make_config(Int(7), 1, 1, 8);
    TruncSeries1 sa = TruncSeries1::identity(a, 4);
    TruncSeries1 sb = TruncSeries1::identity(b, 4);
    CHECK_THROWS_AS(compose(sa, sb), ConfigMismatch);
    CHECK_THROWS_AS(sa + sb, ConfigMismatch);
}

TEST_CASE("truncation guard") {
    ConfigPtr cfg = make_config(Int(5), 1, 1, 8);
    TruncSeries1 s = TruncSeries1::identity(cfg, 4);
    CHECK_THROWS_AS(s.truncated(9), TruncationTooShallow);
    CHECK(s.truncated(2).degree() == 2);
}
