#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "talex/laurent.hpp"
#include "talex/rational_function.hpp"

using namespace talex;

namespace {

HalfLaurent<Rat> random_poly(std::mt19937_64& rng, int max_terms = 6, int max_e2 = 8) {
    HalfLaurent<Rat> h;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < terms; ++i) {
        int e2 = static_cast<int>(rng() % (2 * max_e2 + 1)) - max_e2;
        long long c = static_cast<long long>(rng() % 9) - 4;
        h.add_term(e2, Rat(c));
    }
    return h;
}

} // namespace

TEST_CASE("half-exponent arithmetic") {
    // (t^(1/2) - t^(-1/2))^2 = t - 2 + t^-1
    HalfLaurent<Rat> s;
    s.add_term(1, Rat(1));
    s.add_term(-1, Rat(-1));
    HalfLaurent<Rat> sq = s * s;

    HalfLaurent<Rat> expect;
    expect.add_term(2, Rat(1));
    expect.add_term(0, Rat(-2));
    expect.add_term(-2, Rat(1));
    CHECK(sq == expect);

    CHECK(sq.hdeg2() == 2);
    CHECK(sq.ldeg2() == -2);
    CHECK(sq.deg2() == 4);
    CHECK(sq.lc() == Rat(1));

    CHECK((s - s).is_zero());
    CHECK(s.shifted(2).ldeg2() == 1);
    CHECK(s.scaled(Rat(3)).lc() == Rat(3));
    CHECK((-s).lc() == Rat(-1));
    CHECK((-s).tc() == Rat(1));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("conjugation is an involutive ring map") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_poly(rng), b = random_poly(rng);
        CHECK(hl_conjugate(hl_conjugate(a)) == a);
        CHECK(hl_conjugate(a * b) == hl_conjugate(a) * hl_conjugate(b));
        CHECK(hl_conjugate(a + b) == hl_conjugate(a) + hl_conjugate(b));
    }
    // complex coefficients are conjugated too
    HalfLaurent<Cx> h;
    h.add_term(2, Cx{{0.0, 1.0}});
    auto hc = hl_conjugate(h);
    CHECK(hc.coeff_ptr(-2) != nullptr);
    CHECK(std::abs(hc.coeff_ptr(-2)->v - std::complex<double>(0.0, -1.0)) < 1e-12);
}

TEST_CASE("evaluation at a half power") {
    HalfLaurent<Rat> h;
    h.add_term(2, Rat(1));
    h.add_term(0, Rat(-1));
    h.add_term(-2, Rat(1));
    // t - 1 + t^-1 at u = 2 (t = 4): 4 - 1 + 1/4
    CHECK(h.eval_halfpower(Rat(2)) == Rat(13, 4));
    CHECK(HalfLaurent<Rat>().eval_halfpower(Rat(2)) == Rat(0));
}

TEST_CASE("polynomial rendering") {
    HalfLaurent<Int> a;
    a.add_term(10, Int(1));
    a.add_term(2, Int(1));
    a.add_term(-2, Int(1));
    a.add_term(-10, Int(1));
    CHECK(to_string(a) == "t^5 + t + t^-1 + t^-5");

    HalfLaurent<Int> b;
    b.add_term(4, Int(1));
    b.add_term(2, Int(-2));
    b.add_term(0, Int(3));
    b.add_term(-2, Int(-2));
    b.add_term(-4, Int(1));
    CHECK(to_string(b) == "t^2 - 2*t + 3 - 2*t^-1 + t^-2");

    CHECK(to_string(HalfLaurent<Int>::monomial(1, Int(1))) == "t^(1/2)");
    CHECK(to_string(HalfLaurent<Int>::monomial(-3, Int(-2))) == "-2*t^(-3/2)");
    CHECK(to_string(HalfLaurent<Int>()) == "0");
    CHECK(to_string(HalfLaurent<Int>::constant(Int(-7))) == "-7");
    CHECK(to_string(HalfLaurent<Rat>::monomial(2, Rat(3, 2))) == "3/2*t");
}

TEST_CASE("dense division and gcd") {
    using detail::DensePoly;
    using detail::dense_exact_div;
    using detail::dense_gcd_monic;

    // (u^2 - 1) / (u - 1) = u + 1
    DensePoly<Rat> a{{Rat(-1), Rat(0), Rat(1)}};
    DensePoly<Rat> b{{Rat(-1), Rat(1)}};
    auto q = dense_exact_div(a, b);
    REQUIRE(q.deg() == 1);
    CHECK(q.c[0] == Rat(1));
    CHECK(q.c[1] == Rat(1));

    DensePoly<Rat> c{{Rat(1), Rat(1)}}; // u + 1
    CHECK_THROWS_AS(dense_exact_div(c, b), std::logic_error);

    // gcd(u^2 - 1, u^2 + 2u + 1) = u + 1, monic
    DensePoly<Rat> d{{Rat(1), Rat(2), Rat(1)}};
    auto g = dense_gcd_monic(a, d);
    REQUIRE(g.deg() == 1);
    CHECK(g.c[0] == Rat(1));
    CHECK(g.c[1] == Rat(1));

    // integer exact division is checked
    detail::DensePoly<Int> ia{{Int(-1), Int(0), Int(1)}};
    detail::DensePoly<Int> ib{{Int(-1), Int(1)}};
    CHECK(detail::dense_exact_div(ia, ib).deg() == 1);
    detail::DensePoly<Int> ic{{Int(1), Int(2)}};
    CHECK_THROWS_AS(detail::dense_exact_div(ia, ic), std::logic_error);
}

TEST_CASE("rational functions canonicalize") {
    using RF = RationalFunction<Rat>;

    // (t - 1)(t + 1) / (t - 1) reduces to t + 1
    HalfLaurent<Rat> tm1, tp1;
    tm1.add_term(2, Rat(1));
    tm1.add_term(0, Rat(-1));
    tp1.add_term(2, Rat(1));
    tp1.add_term(0, Rat(1));
    RF f = RF::make(tm1 * tp1, tm1);
    CHECK(f.is_poly());
    CHECK(f.num() == tp1);

    // zero numerator gives the canonical zero
    RF z = RF::make(HalfLaurent<Rat>(), tm1);
    CHECK(z.is_zero());
    CHECK(to_string(z) == "0");

    CHECK_THROWS_AS(RF::make(tp1, HalfLaurent<Rat>()), std::domain_error);
}

TEST_CASE("degrees are representative independent") {
    std::mt19937_64 rng(13);
    using RF = RationalFunction<Rat>;
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 80; ++trial) {
        auto n = random_poly(rng), d = random_poly(rng), m = random_poly(rng);
        if (n.is_zero() || d.is_zero() || m.is_zero()) continue;
        RF f = RF::make(n, d);
        RF g = RF::make(n * m, d * m);
        if (f.is_zero()) continue;
        ++checked;
        CHECK(f == g);
        CHECK(f.degrees().hdeg2 == g.degrees().hdeg2);
        CHECK(f.degrees().ldeg2 == g.degrees().ldeg2);
        CHECK(f.degrees().hdeg2 == n.hdeg2() - d.hdeg2());
        CHECK(f.degrees().ldeg2 == n.ldeg2() - d.ldeg2());
    }
    REQUIRE(checked >= 80);
}

TEST_CASE("rational function arithmetic and degrees multiply") {
    std::mt19937_64 rng(14);
    using RF = RationalFunction<Rat>;
    for (int trial = 0; trial < 60; ++trial) {
        auto n1 = random_poly(rng), d1 = random_poly(rng);
        auto n2 = random_poly(rng), d2 = random_poly(rng);
        if (d1.is_zero() || d2.is_zero()) continue;
        RF f = RF::make(n1, d1), g = RF::make(n2, d2);
        RF p = f * g;
        if (f.is_zero() || g.is_zero()) {
            CHECK(p.is_zero());
            continue;
        }
        CHECK(p.degrees().hdeg2 == f.degrees().hdeg2 + g.degrees().hdeg2);
        CHECK(p.degrees().ldeg2 == f.degrees().ldeg2 + g.degrees().ldeg2);
        CHECK(p.lead() == f.lead() * g.lead());
    }
}

TEST_CASE("rational function rendering balances the denominator") {
    using RF = RationalFunction<Rat>;
    HalfLaurent<Rat> one = HalfLaurent<Rat>::constant(Rat(1));
    HalfLaurent<Rat> s;
    s.add_term(1, Rat(1));
    s.add_term(-1, Rat(-1));
    CHECK(to_string(RF::make(one, s)) == "1/(t^(1/2) - t^(-1/2))");

    HalfLaurent<Rat> n;
    n.add_term(2, Rat(1));
    n.add_term(0, Rat(-1));
    n.add_term(-2, Rat(1));
    CHECK(to_string(RF::make(n, s)) == "(t - 1 + t^-1)/(t^(1/2) - t^(-1/2))");
}

TEST_CASE("conjugation descends to rational functions") {
    std::mt19937_64 rng(15);
    using RF = RationalFunction<Rat>;
    for (int trial = 0; trial < 50; ++trial) {
        auto n = random_poly(rng), d = random_poly(rng);
        if (n.is_zero() || d.is_zero()) continue;
        RF f = RF::make(n, d);
        CHECK(rf_conjugate(rf_conjugate(f)) == f);
        CHECK(rf_conjugate(f) == RF::make(hl_conjugate(n), hl_conjugate(d)));
    }
}
