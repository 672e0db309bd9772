#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rings.hpp"

namespace talex {

// Laurent polynomial in t^(1/2) over C.  Exponents are stored doubled, so
// the map key e represents t^(e/2); integer powers of t are the even keys.
// Zero coefficients are never stored.
template <class C>
class HalfLaurent {
public:
    using coeff_type = C;

    HalfLaurent() = default;

    static HalfLaurent monomial(int e2, C c) {
        HalfLaurent h;
        h.add_term(e2, std::move(c));
        return h;
    }
    static HalfLaurent constant(C c) { return monomial(0, std::move(c)); }

    void add_term(int e2, const C& c) {
        if (ring_traits<C>::is_zero(c)) return;
        auto it = terms_.find(e2);
        if (it == terms_.end()) {
            terms_.emplace(e2, c);
        } else {
            it->second += c;
            if (ring_traits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    const std::map<int, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const C* coeff_ptr(int e2) const {
        auto it = terms_.find(e2);
        return it == terms_.end() ? nullptr : &it->second;
    }

    int hdeg2() const {
        if (terms_.empty()) throw std::domain_error("HalfLaurent: degree of zero");
        return terms_.rbegin()->first;
    }
    int ldeg2() const {
        if (terms_.empty()) throw std::domain_error("HalfLaurent: degree of zero");
        return terms_.begin()->first;
    }
    // exponent span, in doubled units
    int deg2() const { return hdeg2() - ldeg2(); }

    const C& lc() const {
        if (terms_.empty()) throw std::domain_error("HalfLaurent: lc of zero");
        return terms_.rbegin()->second;
    }
    const C& tc() const {
        if (terms_.empty()) throw std::domain_error("HalfLaurent: tc of zero");
        return terms_.begin()->second;
    }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    HalfLaurent operator-() const {
        HalfLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    HalfLaurent scaled(const C& c) const {
        HalfLaurent r;
        for (const auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }
    HalfLaurent shifted(int e2) const {
        HalfLaurent r;
        for (const auto& [e, x] : terms_) r.terms_.emplace(e + e2, x);
        return r;
    }

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
        if constexpr (ring_traits<C>::is_exact) {
            return a.terms_ == b.terms_;
        } else {
            HalfLaurent d = a - b;
            return d.is_zero();
        }
    }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    // evaluate at u = t^(1/2)
    C eval_halfpower(const C& u) const {
        C acc = ring_traits<C>::zero(u);
        if (terms_.empty()) return acc;
        C ui = ldeg2() < 0 ? ring_traits<C>::inv(u) : u;
        for (const auto& [e, c] : terms_)
            acc += c * (e >= 0 ? power(u, e) : power(ui, -e));
        return acc;
    }

private:
    static C power(const C& u, int e) {
        C r = ring_traits<C>::one(u);
        for (int i = 0; i < e; ++i) r *= u;
        return r;
    }

    std::map<int, C> terms_;
};

// ring map on coefficients combined with t -> t^-1
template <class C>
HalfLaurent<C> hl_conjugate(const HalfLaurent<C>& h) {
    HalfLaurent<C> r;
    for (const auto& [e, c] : h.terms()) r.add_term(-e, ring_traits<C>::conj(c));
    return r;
}

template <class C>
HalfLaurent<C> hl_from_int_poly(const HalfLaurent<Int>& h, const C& like) {
    HalfLaurent<C> r;
    for (const auto& [e, c] : h.terms())
        r.add_term(e, ring_traits<C>::from_int(c, like));
    return r;
}

// ---- rendering ----------------------------------------------------------

namespace detail {

inline std::string halfpower_to_string(int e2) {
    if (e2 == 2) return "t";
    if (e2 % 2 == 0) return "t^" + std::to_string(e2 / 2);
    return "t^(" + std::to_string(e2) + "/2)";
}

inline std::string wrap_if_compound(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') {
            // exponent signs inside scientific notation still read fine in parens
            return "(" + s + ")";
        }
    return s;
}

} // namespace detail

template <class C>
std::string to_string(const HalfLaurent<C>& h) {
    if (h.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
        int e2 = it->first;
        C c = it->second;
        bool negative = ring_traits<C>::is_negative(c);
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (e2 == 0) {
            out += detail::wrap_if_compound(ring_traits<C>::to_string(c));
        } else if (ring_traits<C>::is_one(c)) {
            out += detail::halfpower_to_string(e2);
        } else {
            out += detail::wrap_if_compound(ring_traits<C>::to_string(c));
            out += "*";
            out += detail::halfpower_to_string(e2);
        }
    }
    return out;
}

// ---- dense u-polynomials (internal) --------------------------------------
//
// Shared kit for the fraction-free determinant and the rational-function
// gcd: coefficients ascending in u = t^(1/2), index 0 = u^0.

namespace detail {

template <class C>
struct DensePoly {
    std::vector<C> c; // ascending, trimmed

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && ring_traits<C>::is_zero(c.back())) c.pop_back();
    }

    static DensePoly one(const C& like) {
        DensePoly p;
        p.c.push_back(ring_traits<C>::one(like));
        return p;
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, ring_traits<C>::zero(a.c[0]));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        DensePoly r = a;
        if (r.c.size() < b.c.size())
            r.c.resize(b.c.size(), ring_traits<C>::zero(b.c.empty() ? C() : b.c[0]));
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }

    DensePoly scaled(const C& s) const {
        DensePoly r;
        r.c.reserve(c.size());
        for (const auto& x : c) r.c.push_back(x * s);
        r.trim();
        return r;
    }
};

inline Int coeff_exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw std::logic_error("integer division not exact");
    return q;
}
inline Rat coeff_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Fp coeff_exact_div(const Fp& a, const Fp& b) { return a * ring_traits<Fp>::inv(b); }
inline Cx coeff_exact_div(const Cx& a, const Cx& b) { return a * ring_traits<Cx>::inv(b); }

// checked exact division: requires b | a in C[u]; each leading-coefficient
// step must divide exactly (integers) or invert (fields)
template <class C>
DensePoly<C> dense_exact_div(DensePoly<C> a, const DensePoly<C>& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    DensePoly<C> q;
    if (a.is_zero()) return q;
    if (a.deg() < b.deg()) throw std::logic_error("poly division not exact");
    q.c.assign(a.deg() - b.deg() + 1, ring_traits<C>::zero(b.c.back()));
    const C& lead = b.c.back();
    while (!a.is_zero() && a.deg() >= b.deg()) {
        C step = coeff_exact_div(a.c.back(), lead);
        int shift = a.deg() - b.deg();
        q.c[shift] = step;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] -= b.c[i] * step;
        if (!ring_traits<C>::is_zero(a.c.back()))
            throw std::logic_error("poly division not exact");
        a.trim();
    }
    if (!a.is_zero()) throw std::logic_error("poly division not exact");
    return q;
}

// remainder of field-coefficient division, for the Euclidean gcd
template <class C>
DensePoly<C> dense_rem(DensePoly<C> a, const DensePoly<C>& b) {
    C lead_inv = ring_traits<C>::inv(b.c.back());
    while (!a.is_zero() && a.deg() >= b.deg()) {
        C step = a.c.back() * lead_inv;
        int shift = a.deg() - b.deg();
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] -= b.c[i] * step;
        a.trim();
    }
    return a;
}

template <class C>
DensePoly<C> dense_gcd_monic(DensePoly<C> a, DensePoly<C> b) {
    while (!b.is_zero()) {
        DensePoly<C> r = dense_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(ring_traits<C>::inv(a.c.back()));
}

template <class C>
DensePoly<C> dense_from_hl(const HalfLaurent<C>& h, int& ldeg2_out) {
    DensePoly<C> p;
    if (h.is_zero()) {
        ldeg2_out = 0;
        return p;
    }
    ldeg2_out = h.ldeg2();
    p.c.assign(h.deg2() + 1, ring_traits<C>::zero(h.terms().begin()->second));
    for (const auto& [e, c] : h.terms()) p.c[e - ldeg2_out] = c;
    return p;
}

template <class C>
HalfLaurent<C> hl_from_dense(const DensePoly<C>& p, int shift2 = 0) {
    HalfLaurent<C> h;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        h.add_term(static_cast<int>(i) + shift2, p.c[i]);
    return h;
}

} // namespace detail

} // namespace talex
