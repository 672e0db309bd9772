#pragma once

#include <stdexcept>
#include <string>

#include "laurent.hpp"
#include "rings.hpp"

namespace talex {

// numerator/denominator degrees cancel representative-independently
struct Degrees {
    int hdeg2; // doubled, as in HalfLaurent
    int ldeg2;
    int deg2() const { return hdeg2 - ldeg2; }
};

// Quotient of half-exponent Laurent polynomials over a coefficient field.
// Canonical form: gcd-reduced (exact fields), denominator monic with lowest
// exponent 0; the zero element is 0/1.  Over Cx the gcd step is skipped and
// canonicalization is shift + monic scaling + tolerance pruning only, so
// comparisons should go through evaluation.
template <class C>
class RationalFunction {
public:
    RationalFunction()
        : num_(), den_(HalfLaurent<C>::constant(ring_traits<C>::one())) {}

    static RationalFunction make(const HalfLaurent<C>& num, const HalfLaurent<C>& den) {
        if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        RationalFunction f;
        if (num.is_zero()) {
            f.den_ = HalfLaurent<C>::constant(ring_traits<C>::one(den.lc()));
            return f;
        }
        int ns = 0, ds = 0;
        auto n = detail::dense_from_hl(num, ns);
        auto d = detail::dense_from_hl(den, ds);
        if constexpr (ring_traits<C>::is_exact) {
            auto g = detail::dense_gcd_monic(n, d);
            if (g.deg() > 0) {
                n = detail::dense_exact_div(std::move(n), g);
                d = detail::dense_exact_div(std::move(d), g);
            }
        }
        C scale = ring_traits<C>::inv(d.c.back());
        n = n.scaled(scale);
        d = d.scaled(scale);
        f.num_ = detail::hl_from_dense(n, ns - ds);
        f.den_ = detail::hl_from_dense(d, 0);
        if (f.num_.is_zero()) // numeric cancellation to zero
            f.den_ = HalfLaurent<C>::constant(ring_traits<C>::one(den.lc()));
        return f;
    }

    static RationalFunction from_poly(const HalfLaurent<C>& p) {
        C like = p.is_zero() ? C() : p.lc();
        return make(p, HalfLaurent<C>::constant(ring_traits<C>::one(like)));
    }

    const HalfLaurent<C>& num() const { return num_; }
    const HalfLaurent<C>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const {
        return num_.is_zero() ||
               (den_.term_count() == 1 && den_.hdeg2() == 0 &&
                ring_traits<C>::is_one(den_.lc()));
    }

    Degrees degrees() const {
        if (is_zero()) throw std::domain_error("RationalFunction: degrees of zero");
        return Degrees{num_.hdeg2() - den_.hdeg2(), num_.ldeg2() - den_.ldeg2()};
    }
    // leading coefficient; the denominator is monic, so this is lc(num)
    C lead() const {
        if (is_zero()) throw std::domain_error("RationalFunction: lead of zero");
        return num_.lc();
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }
    RationalFunction times_poly(const HalfLaurent<C>& p) const {
        return make(num_ * p, den_);
    }
    RationalFunction shifted(int e2) const {
        return make(num_.shifted(e2), den_);
    }
    RationalFunction scaled(const C& c) const { return make(num_.scaled(c), den_); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if constexpr (ring_traits<C>::is_exact)
            return a.num_ == b.num_ && a.den_ == b.den_;
        else
            return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    C eval_halfpower(const C& u) const {
        return num_.eval_halfpower(u) * ring_traits<C>::inv(den_.eval_halfpower(u));
    }

private:
    HalfLaurent<C> num_;
    HalfLaurent<C> den_;
};

template <class C>
RationalFunction<C> rf_conjugate(const RationalFunction<C>& f) {
    if (f.is_zero()) return f;
    return RationalFunction<C>::make(hl_conjugate(f.num()), hl_conjugate(f.den()));
}

// Render as a single fraction.  The denominator is shifted to balanced form
// (exponents symmetric about 0) when its exponent span is even, which is the
// form the half-exponent denominators t^(1/2) - t^(-1/2) etc. are usually
// written in.
template <class C>
std::string to_string(const RationalFunction<C>& f) {
    if (f.is_zero()) return "0";
    if (f.is_poly()) return to_string(f.num());
    int sum = f.den().hdeg2() + f.den().ldeg2();
    int shift = (sum % 2 == 0) ? -sum / 2 : 0;
    HalfLaurent<C> n = f.num().shifted(shift);
    HalfLaurent<C> d = f.den().shifted(shift);
    std::string ns = to_string(n);
    if (n.term_count() > 1) ns = "(" + ns + ")";
    return ns + "/(" + to_string(d) + ")";
}

// coefficient-field promotion for values computed over Z
template <class C>
struct field_of {
    using type = C;
};
template <>
struct field_of<Int> {
    using type = Rat;
};

template <class C>
HalfLaurent<typename field_of<C>::type> hl_to_field(const HalfLaurent<C>& h) {
    if constexpr (std::is_same_v<C, Int>) {
        HalfLaurent<Rat> r;
        for (const auto& [e, c] : h.terms()) r.add_term(e, Rat(c));
        return r;
    } else {
        return h;
    }
}

} // namespace talex
