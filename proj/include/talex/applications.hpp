#pragma once

#include <string>
#include <vector>

#include "twisted.hpp"

namespace talex {

// Conway polynomial in z = t^(1/2) - t^(-1/2), integer coefficients
// ascending in z.  Recovered from the 1-dimensional trivial representation:
// z * invariant is a Laurent polynomial f with f(1) = 1 and degree sum 0,
// and rewriting f in powers of z gives the coefficients.
struct ConwayPolynomial {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& lead() const {
        if (coeffs.empty()) throw std::domain_error("Conway polynomial is zero");
        return coeffs.back();
    }
    Int at(int i) const { return i < static_cast<int>(coeffs.size()) ? coeffs[i] : Int(0); }

    friend bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return !(a == b);
    }
};

inline std::string to_string(const ConwayPolynomial& c) {
    if (c.coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (int i = c.degree(); i >= 0; --i) {
        Int v = c.coeffs[i];
        if (v == 0) continue;
        bool neg = v < 0;
        if (neg) v = -v;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string zpart = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (i == 0)
            out += v.str();
        else if (v == 1)
            out += zpart;
        else
            out += v.str() + "*" + zpart;
    }
    return out.empty() ? "0" : out;
}

// z^m expanded in half powers of t: sum_j (-1)^j binom(m,j) t^((m-2j)/2)
inline HalfLaurent<Rat> z_power(int m) {
    HalfLaurent<Rat> out;
    Int binom = 1;
    for (int j = 0; j <= m; ++j) {
        out.add_term(m - 2 * j, Rat(j % 2 == 0 ? binom : -binom));
        binom = binom * (m - j) / (j + 1);
    }
    return out;
}

inline ConwayPolynomial conway_from_invariant(const NormalizedInvariant<Rat>& inv) {
    if (inv.zero)
        throw degenerate_error("invariant of the trivial representation vanishes");
    HalfLaurent<Rat> z;
    z.add_term(1, Rat(1));
    z.add_term(-1, Rat(-1));
    RationalFunction<Rat> f_rf = inv.value.times_poly(z);
    if (!f_rf.is_poly())
        throw degenerate_error(
            "z * invariant is not a Laurent polynomial; presentation is outside the "
            "normalized theory");
    HalfLaurent<Rat> f = f_rf.num();
    if (f.is_zero() || f.eval_halfpower(Rat(1)) != 1)
        throw degenerate_error("normalization check failed: f(1) != 1");
    if (f.hdeg2() + f.ldeg2() != 0)
        throw degenerate_error("normalization check failed: deg f not centered");

    ConwayPolynomial out;
    out.coeffs.assign(f.hdeg2() + 1, Int(0));
    while (!f.is_zero()) {
        int m = f.hdeg2();
        if (m < 0 || -f.ldeg2() > m)
            throw degenerate_error("f is not a polynomial in z");
        Rat c = f.lc();
        if (boost::multiprecision::denominator(c) != 1)
            throw degenerate_error("Conway coefficient is not an integer");
        out.coeffs[m] = boost::multiprecision::numerator(c);
        f = f - z_power(m).scaled(c);
    }
    while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
    return out;
}

inline ConwayPolynomial conway_polynomial(const Presentation& p) {
    auto rho = trivial_representation(p, Rat(1));
    return conway_from_invariant(normalized_invariant(p, rho));
}

// Necessary conditions for fibering with fiber genus g, checked against a
// representation of dimension n:
//   deg_ok  : deg = n(2g-1)
//   hdeg_ok : 2 hdeg = n(2g-1)
//   coeff_ok: leading coefficient of value * eps^power matches c(Conway)^n
//             times the predicted eps power
// The predicted eps exponent is g - 1/2; the alternative reading 2g - 1 is
// also evaluated and reported, and the two only differ when eps != 1.
template <class C>
struct FiberedCheck {
    using F = typename field_of<C>::type;
    bool deg_ok = false;
    bool hdeg_ok = false;
    bool coeff_ok = false;
    int deg2 = 0, expected_deg2 = 0;
    int hdeg2 = 0, expected_hdeg2 = 0;
    F c_value{};
    F c_conway_n{};
    F eps{};
    bool coeff_ok_alt = false;   // with exponent 2g - 1 instead of g - 1/2
    bool eps_discrepancy = false; // eps != 1, so the two exponents disagree
    std::string reason;          // first failing condition, empty when consistent

    bool consistent() const { return deg_ok && hdeg_ok && coeff_ok; }
};

namespace detail {

inline std::string half_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

} // namespace detail

template <class C>
FiberedCheck<C> fibered_check(const NormalizedInvariant<C>& inv, const ConwayPolynomial& conway,
                              int genus) {
    using F = typename field_of<C>::type;
    if (genus < 1) throw std::invalid_argument("fiber genus must be >= 1");
    FiberedCheck<C> out;
    int n = inv.n;
    out.expected_deg2 = 2 * n * (2 * genus - 1);
    out.expected_hdeg2 = n * (2 * genus - 1);
    if (inv.zero) {
        out.reason = "invariant is zero";
        return out;
    }
    Degrees dg = inv.value.degrees();
    out.deg2 = dg.deg2();
    out.hdeg2 = dg.hdeg2;
    out.deg_ok = out.deg2 == out.expected_deg2;
    out.hdeg_ok = out.hdeg2 == out.expected_hdeg2;

    out.eps = inv.eps;
    out.c_value = inv.value.lead();
    Int cn = 1;
    for (int i = 0; i < n; ++i) cn *= conway.lead();
    out.c_conway_n = ring_traits<F>::from_int(cn, inv.eps);
    out.eps_discrepancy = !ring_traits<F>::is_one(inv.eps);

    // target: c_value * eps^(eps_power2/2) == c_conway_n * eps^(E2/2)
    auto coeff_matches = [&](int E2) {
        int diff2 = E2 - inv.eps_power2;
        if (ring_traits<F>::is_one(inv.eps)) return out.c_value == out.c_conway_n;
        if (diff2 % 2 != 0) return false; // a stray half power of eps cannot cancel
        return out.c_value == out.c_conway_n * ring_pow(inv.eps, diff2 / 2);
    };
    out.coeff_ok = coeff_matches(2 * genus - 1);
    out.coeff_ok_alt = coeff_matches(2 * (2 * genus - 1));

    if (!out.deg_ok)
        out.reason = "deg " + detail::half_string(out.deg2) + " != " +
                     detail::half_string(out.expected_deg2);
    else if (!out.hdeg_ok)
        out.reason = "2*hdeg " + detail::half_string(2 * out.hdeg2) + " != " +
                     detail::half_string(2 * out.expected_hdeg2);
    else if (!out.coeff_ok)
        out.reason = "leading coefficient mismatch";
    return out;
}

template <class C>
FiberedCheck<C> fibered_check(const Presentation& p, const Representation<C>& rho, int genus) {
    auto inv = normalized_invariant(p, rho);
    return fibered_check(inv, conway_polynomial(p), genus);
}

inline long long ceil_div(long long a, long long b) {
    // b > 0
    long long q = a / b, r = a % b;
    return q + ((r != 0 && a > 0) ? 1 : 0);
}

// smallest g with 2 hdeg <= n(2g - 1), clamped at 0
template <class C>
long long free_genus_lower_bound(const NormalizedInvariant<C>& inv) {
    if (inv.zero) return 0;
    long long h2 = inv.value.degrees().hdeg2;
    long long n = inv.n;
    long long g = ceil_div(h2 + n, 2 * n);
    return g > 0 ? g : 0;
}

// smallest g with deg <= n(2g - 1), clamped at 0
template <class C>
long long genus_lower_bound(const NormalizedInvariant<C>& inv) {
    if (inv.zero) return 0;
    long long d2 = inv.value.degrees().deg2();
    long long n = inv.n;
    long long g = ceil_div(d2 + 2 * n, 4 * n);
    return g > 0 ? g : 0;
}

} // namespace talex
