#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "talex/matrix.hpp"

using namespace talex;

namespace {

HalfLaurent<Int> random_entry(std::mt19937_64& rng) {
    HalfLaurent<Int> h;
    int terms = static_cast<int>(rng() % 4); // may be zero
    for (int i = 0; i < terms; ++i) {
        int e2 = static_cast<int>(rng() % 13) - 6;
        long long c = static_cast<long long>(rng() % 7) - 3;
        h.add_term(e2, Int(c));
    }
    return h;
}

PolyMatrix<Int> random_matrix(std::mt19937_64& rng, int n) {
    PolyMatrix<Int> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_entry(rng);
    return m;
}

PolyMatrix<Cx> to_cx(const PolyMatrix<Int>& m) {
    PolyMatrix<Cx> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = hl_from_int_poly(m.at(i, j), Cx{});
    return r;
}

} // namespace

TEST_CASE("scalar matrices multiply and invert") {
    Mat<Rat> a(2, Rat(0));
    a.at(0, 0) = Rat(1);
    a.at(0, 1) = Rat(2);
    a.at(1, 0) = Rat(3);
    a.at(1, 1) = Rat(4);
    CHECK(a.det() == Rat(-2));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());

    Mat<Fp> f(2, Fp{0, 7});
    f.at(0, 0) = Fp{1, 7};
    f.at(0, 1) = Fp{2, 7};
    f.at(1, 0) = Fp{3, 7};
    f.at(1, 1) = Fp{4, 7};
    CHECK(f.det() == Fp{5, 7});
    CHECK((f * f.inverse()).is_identity());

    Mat<Int> u(2, Int(0));
    u.at(0, 0) = Int(2);
    u.at(0, 1) = Int(1);
    u.at(1, 0) = Int(1);
    u.at(1, 1) = Int(1);
    CHECK(u.det() == Int(1));
    CHECK((u * u.inverse()).is_identity());

    Mat<Int> nonunit(2, Int(0));
    nonunit.at(0, 0) = Int(2);
    nonunit.at(1, 1) = Int(1);
    CHECK(nonunit.det() == Int(2));
    CHECK_THROWS_AS(nonunit.inverse(), std::domain_error);

    Mat<Rat> sing(2, Rat(0));
    sing.at(0, 0) = Rat(1);
    sing.at(1, 0) = Rat(1);
    CHECK(sing.det() == Rat(0));
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("conjugate transpose") {
    Mat<Cx> m(2, Cx{});
    m.at(0, 0) = Cx{{0.0, 1.0}};
    m.at(0, 1) = Cx{{2.0, 0.0}};
    m.at(1, 0) = Cx{{0.0, 0.0}};
    m.at(1, 1) = Cx{{1.0, -1.0}};
    Mat<Cx> h = m.conj_transpose();
    CHECK(std::abs(h.at(0, 0).v - std::complex<double>(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(h.at(1, 0).v - std::complex<double>(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(h.at(0, 1).v) < 1e-12);
    CHECK(std::abs(h.at(1, 1).v - std::complex<double>(1.0, 1.0)) < 1e-12);
}

TEST_CASE("exact determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 6); // 0..5
        PolyMatrix<Int> m = random_matrix(rng, n);
        CHECK(det_exact(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("exact determinant pivots past zero corners") {
    PolyMatrix<Int> m(3, 3);
    // first column starts with zeros to force row swaps
    m.at(1, 0) = HalfLaurent<Int>::monomial(2, Int(1));
    m.at(2, 0) = HalfLaurent<Int>::monomial(-2, Int(3));
    m.at(0, 1) = HalfLaurent<Int>::monomial(0, Int(2));
    m.at(1, 1) = HalfLaurent<Int>::monomial(4, Int(1));
    m.at(2, 2) = HalfLaurent<Int>::monomial(1, Int(-1));
    m.at(0, 2) = HalfLaurent<Int>::monomial(-1, Int(5));
    CHECK(det_exact(m) == oracle::det_cofactor(m));
}

TEST_CASE("numeric determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4); // 1..4
        PolyMatrix<Cx> m = to_cx(random_matrix(rng, n));
        HalfLaurent<Cx> fast = det_numeric(m);
        HalfLaurent<Cx> slow = oracle::det_cofactor(m);
        CHECK(oracle::max_eval_gap(fast, slow) <= 1e-9);
    }
}

TEST_CASE("numeric determinant detects a planted perturbation") {
    PolyMatrix<Cx> m(3, 3);
    for (int i = 0; i < 3; ++i) m.at(i, i) = HalfLaurent<Cx>::monomial(2, Cx{{1.0, 0.0}});
    HalfLaurent<Cx> base = det_numeric(m);
    m.at(0, 0).add_term(0, Cx{{1e-6, 0.0}});
    HalfLaurent<Cx> bumped = det_numeric(m);
    CHECK(oracle::max_eval_gap(base, bumped) > 1e-9);
}

TEST_CASE("numeric determinant of a singular matrix is zero") {
    PolyMatrix<Cx> m(3, 3);
    for (int j = 0; j < 3; ++j) {
        HalfLaurent<Cx> e;
        e.add_term(2 * j, Cx{{1.0, 0.0}});
        e.add_term(0, Cx{{-1.0, 0.5}});
        m.at(0, j) = e;
        m.at(1, j) = e; // duplicate row
        m.at(2, j) = HalfLaurent<Cx>::monomial(j, Cx{{0.25, 0.0}});
    }
    CHECK(det_numeric(m).is_zero());
}

TEST_CASE("column deletion") {
    PolyMatrix<Int> m(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = HalfLaurent<Int>::constant(Int(10 * i + j));
    PolyMatrix<Int> r = m.without_column(1);
    REQUIRE(r.cols() == 2);
    CHECK(r.at(0, 0) == HalfLaurent<Int>::constant(Int(0)));
    CHECK(r.at(0, 1) == HalfLaurent<Int>::constant(Int(2)));
    CHECK(r.at(1, 0) == HalfLaurent<Int>::constant(Int(10)));
    CHECK(r.at(1, 1) == HalfLaurent<Int>::constant(Int(12)));
}
