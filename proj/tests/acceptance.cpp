// End-to-end checks over the shipped example files.  Each numbered block
// prints one PASS/FAIL line with its runtime; the exit status is the number
// of failing blocks.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "talex/applications.hpp"
#include "talex/io.hpp"

using namespace talex;

namespace {

const std::string data = TALEX_DATA_DIR;
const double pi = std::acos(-1.0);
int failures = 0;

template <class Fn>
void criterion(int number, const std::string& label, Fn&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d. %s%s (%.2fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                note.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

Presentation knot11n73() { return load_topology_file(data + "/knot11n73.pres"); }

Representation<Fp> rep_11n73() {
    auto parsed = parse_representation_file(data + "/rep_11n73_f2.rep");
    return std::get<Representation<Fp>>(parsed.rep);
}

HalfLaurent<Rat> halfpower_shift() {
    return HalfLaurent<Rat>::monomial(1, Rat(1)) + HalfLaurent<Rat>::monomial(-1, Rat(-1));
}

struct TorusCase {
    int p, q;
    std::string file;
    std::vector<std::pair<int, int>> ab; // 1<=a<p, 1<=b<q, a = b mod 2
};

const std::vector<TorusCase> torus_cases = {
    {2, 3, "trefoil_torus.pres", {{1, 1}}},
    {2, 5, "torus_2_5.pres", {{1, 1}, {1, 3}}},
    {3, 4, "torus_3_4.pres", {{1, 1}, {1, 3}, {2, 2}}},
};

Representation<Cx> su2_rep(int p, int q, int a, int b, double s) {
    Mat<Cx> x = Mat<Cx>::identity(2, Cx(1.0));
    x.at(0, 0) = Cx(std::polar(1.0, a * pi / p));
    x.at(1, 1) = Cx(std::polar(1.0, -a * pi / p));
    double cq = std::cos(b * pi / q);
    double sq = std::sin(b * pi / q);
    Mat<Cx> y = Mat<Cx>::identity(2, Cx(1.0));
    y.at(0, 0) = Cx(cq, sq * std::cos(pi * s));
    y.at(0, 1) = Cx(sq * std::sin(pi * s), 0.0);
    y.at(1, 0) = Cx(-sq * std::sin(pi * s), 0.0);
    y.at(1, 1) = Cx(cq, -sq * std::cos(pi * s));
    return Representation<Cx>(2, {{"x", x}, {"y", y}});
}

std::complex<double> torus_value(int p, int q, int a, int b, std::complex<double> u) {
    auto up = [&](int e) { return std::pow(u, static_cast<double>(e)); };
    double sign = (a % 2 == 0) ? 1.0 : -1.0;
    std::complex<double> root = up(p * q) - sign * up(-p * q);
    std::complex<double> d1 = up(2 * p) - 2.0 * std::cos(b * pi / q) + up(-2 * p);
    std::complex<double> d2 = up(2 * q) - 2.0 * std::cos(a * pi / p) + up(-2 * q);
    return root * root / (d1 * d2);
}

template <class C>
bool stable_under_columns_and_moves(const Presentation& p, const Representation<C>& rho) {
    auto base = normalized_invariant(p, rho);
    for (int k = 1; k <= p.num_gens(); ++k) {
        if (p.alpha(k) == 0) continue;
        if (!invariant_equal(base, normalized_invariant_at(p, rho, k))) return false;
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TietzeRun run = random_tietze_run(p, 100, seed);
        auto moved = extend_through_moves(p, rho, run.moves);
        if (!invariant_equal(base, normalized_invariant(run.result, moved))) return false;
    }
    return true;
}

HalfLaurent<Int> random_entry(std::mt19937_64& rng) {
    HalfLaurent<Int> h;
    int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        int e2 = static_cast<int>(rng() % 13) - 6;
        long long c = static_cast<long long>(rng() % 7) - 3;
        h.add_term(e2, Int(c));
    }
    return h;
}

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
    Word w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) {
        int idx = 1 + static_cast<int>(rng() % gens);
        w.push(rng() % 2 == 0 ? idx : -idx);
    }
    return w;
}

} // namespace

int main() {
    criterion(1, "11n73 invariant over F2 is t^5 + t + t^-1 + t^-5 in under 5s", [] {
        auto t0 = std::chrono::steady_clock::now();
        Presentation p = knot11n73();
        Representation<Fp> rho = rep_11n73();
        auto inv = normalized_invariant(p, rho);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        Fp one(1, 2);
        HalfLaurent<Fp> expect = HalfLaurent<Fp>::monomial(10, one) +
                                 HalfLaurent<Fp>::monomial(2, one) +
                                 HalfLaurent<Fp>::monomial(-2, one) +
                                 HalfLaurent<Fp>::monomial(-10, one);
        return !inv.zero && inv.value == RationalFunction<Fp>::from_poly(expect) && secs < 5.0;
    });

    criterion(2, "11n73 trivial representation recovers t^2 - 2t + 3 - 2t^-1 + t^-2", [] {
        Presentation p = knot11n73();
        auto inv = normalized_invariant(p, trivial_representation(p, Rat(1)));
        auto f = RationalFunction<Rat>::from_poly(halfpower_shift()) * inv.value;
        HalfLaurent<Rat> expect;
        expect.add_term(4, Rat(1));
        expect.add_term(2, Rat(-2));
        expect.add_term(0, Rat(3));
        expect.add_term(-2, Rat(-2));
        expect.add_term(-4, Rat(1));
        return f.is_poly() && f == RationalFunction<Rat>::from_poly(expect);
    });

    criterion(3, "torus knot SU(2) invariants match the closed form to 1e-9", [] {
        for (const auto& tc : torus_cases) {
            Presentation p = load_topology_file(data + "/" + tc.file);
            for (auto [a, b] : tc.ab)
                for (double s : {0.3, 0.5}) {
                    auto rho = su2_rep(tc.p, tc.q, a, b, s);
                    verify_representation(p, rho);
                    auto inv = normalized_invariant(p, rho);
                    if (inv.zero || !ring_traits<Cx>::is_one(inv.eps)) return false;
                    for (int k = 0; k < 20; ++k) {
                        std::complex<double> u = std::polar(1.08, 0.17 + 2 * pi * k / 20);
                        std::complex<double> got = inv.value.eval_halfpower(Cx(u)).v;
                        std::complex<double> want = torus_value(tc.p, tc.q, a, b, u);
                        if (std::abs(got - want) > 1e-9) return false;
                    }
                }
        }
        return true;
    });

    criterion(4, "column choice and 100 random Tietze moves x 10 seeds fix the value", [] {
        Presentation tre = load_topology_file(data + "/trefoil.pd");
        Presentation fig = load_topology_file(data + "/figure8.pd");
        Presentation p11 = knot11n73();
        return stable_under_columns_and_moves(tre, trivial_representation(tre, Rat(1))) &&
               stable_under_columns_and_moves(fig, trivial_representation(fig, Rat(1))) &&
               stable_under_columns_and_moves(p11, rep_11n73());
    });

    criterion(5, "dual representation negates and conjugates the invariant", [] {
        Presentation p11 = knot11n73();
        Representation<Fp> rho = rep_11n73();
        auto inv = normalized_invariant(p11, rho);
        auto dual = normalized_invariant(p11, rho.dagger());
        if (!invariant_equal(dual, conjugate_invariant(inv))) return false; // n = 2
        for (const auto& tc : torus_cases) {
            Presentation p = load_topology_file(data + "/" + tc.file);
            for (auto [a, b] : tc.ab)
                for (double s : {0.3, 0.5}) {
                    auto rho2 = su2_rep(tc.p, tc.q, a, b, s);
                    auto iv = normalized_invariant(p, rho2);
                    auto ivd = normalized_invariant(p, rho2.dagger());
                    if (!ring_traits<Cx>::is_one(iv.eps) || !ring_traits<Cx>::is_one(ivd.eps))
                        return false;
                    auto conj = conjugate_invariant(iv);
                    for (int k = 0; k < 16; ++k) {
                        Cx u(std::polar(1.08, 0.11 + 2 * pi * k / 16));
                        std::complex<double> lhs = ivd.value.eval_halfpower(u).v;
                        std::complex<double> rhs = conj.value.eval_halfpower(u).v;
                        if (std::abs(lhs - rhs) > 1e-9) return false;
                    }
                }
        }
        return true;
    });

    criterion(6, "fibering check passes for the trefoil and rejects 11n73 at genus 2", [] {
        Presentation tre = load_topology_file(data + "/trefoil_torus.pres");
        auto fc1 = fibered_check(tre, trivial_representation(tre, Rat(1)), 1);
        if (!(fc1.deg_ok && fc1.hdeg_ok && fc1.coeff_ok && fc1.consistent())) return false;
        auto fc2 = fibered_check(knot11n73(), rep_11n73(), 2);
        return !fc2.consistent() && fc2.reason == "deg 10 != 6";
    });

    criterion(7, "11n73 genus bounds: free genus >= 3 and genus >= 3", [] {
        auto inv = normalized_invariant(knot11n73(), rep_11n73());
        return free_genus_lower_bound(inv) == 3 && genus_lower_bound(inv) == 3;
    });

    criterion(8, "Conway polynomials of unknot, trefoil and figure eight diagrams", [] {
        struct Case {
            std::string file;
            std::vector<long long> coeffs;
        };
        const std::vector<Case> cases = {
            {"unknot.pd", {1}}, {"trefoil.pd", {1, 0, 1}}, {"figure8.pd", {1, 0, -1}}};
        for (const auto& c : cases) {
            Presentation p = load_topology_file(data + "/" + c.file);
            auto inv = normalized_invariant(p, trivial_representation(p, Rat(1)));
            auto f = RationalFunction<Rat>::from_poly(halfpower_shift()) * inv.value;
            if (!f.is_poly()) return false;
            if (!(f.num().eval_halfpower(Rat(1)) == Rat(1))) return false;
            if (f.num().hdeg2() + f.num().ldeg2() != 0) return false;
            std::vector<Int> expect;
            for (long long v : c.coeffs) expect.push_back(Int(v));
            if (conway_from_invariant(inv).coeffs != expect) return false;
        }
        return true;
    });

    criterion(9, "determinants match a cofactor oracle; Fox identity on 1000 words", [] {
        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 200; ++trial) {
            int n = static_cast<int>(rng() % 6);
            PolyMatrix<Int> m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = random_entry(rng);
            if (!(det_exact(m) == oracle::det_cofactor(m))) return false;
            if (n == 0) continue;
            PolyMatrix<Cx> c(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) c.at(i, j) = hl_from_int_poly(m.at(i, j), Cx{});
            if (oracle::max_eval_gap(det_numeric(c), oracle::det_cofactor(c)) > 1e-9)
                return false;
        }
        std::mt19937_64 wrng(7);
        for (int trial = 0; trial < 1000; ++trial) {
            Word w = random_word(wrng, 4, 48);
            GroupRingElement sum;
            for (int j = 1; j <= 4; ++j) {
                GroupRingElement xj_minus_1 =
                    GroupRingElement::from_word(Word::generator(j)) - GroupRingElement::one();
                sum = sum + fox_derivative(w, j) * xj_minus_1;
            }
            if (!(sum == GroupRingElement::from_word(w) - GroupRingElement::one()))
                return false;
        }
        return true;
    });

    return failures;
}
