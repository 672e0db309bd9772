#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "group_ring.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "rational_function.hpp"
#include "representation.hpp"

namespace talex {

// tensor of the abelianization character with rho: w maps to
// t^alpha(w) * rho(w), an n x n matrix of monomials summed over group ring
// terms
template <class C>
PolyMatrix<C> phi_apply(const GroupRingElement& e, const Presentation& p,
                        const Representation<C>& rho) {
    int n = rho.dim();
    PolyMatrix<C> out(n, n);
    for (const auto& [w, coeff] : e.terms()) {
        Mat<C> m = rho.word_image(p, w);
        long long a = p.alpha_of(w);
        int e2 = static_cast<int>(2 * a);
        C c = ring_traits<C>::from_int(coeff, rho.exemplar());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i, j).add_term(e2, c * m.at(i, j));
    }
    return out;
}

// full Fox Jacobian under phi: block (i,j) is phi(d r_i / d x_j)
template <class C>
PolyMatrix<C> fox_jacobian(const Presentation& p, const Representation<C>& rho) {
    int n = rho.dim();
    int rel = p.num_relators();
    int gen = p.num_gens();
    PolyMatrix<C> out(n * rel, n * gen);
    for (int i = 0; i < rel; ++i)
        for (int j = 0; j < gen; ++j) {
            auto block = phi_apply(fox_derivative(p.relators()[i], j + 1), p, rho);
            for (int bi = 0; bi < n; ++bi)
                for (int bj = 0; bj < n; ++bj)
                    out.at(i * n + bi, j * n + bj) = std::move(block.at(bi, bj));
        }
    return out;
}

template <class C>
PolyMatrix<C> fox_jacobian_minor(const Presentation& p, const Representation<C>& rho, int k) {
    if (k < 1 || k > p.num_gens()) throw std::invalid_argument("column index");
    int n = rho.dim();
    int rel = p.num_relators();
    PolyMatrix<C> out(n * rel, n * rel);
    for (int i = 0; i < rel; ++i) {
        int out_j = 0;
        for (int j = 0; j < p.num_gens(); ++j) {
            if (j == k - 1) continue;
            auto block = phi_apply(fox_derivative(p.relators()[i], j + 1), p, rho);
            for (int bi = 0; bi < n; ++bi)
                for (int bj = 0; bj < n; ++bj)
                    out.at(i * n + bi, out_j * n + bj) = std::move(block.at(bi, bj));
            ++out_j;
        }
    }
    return out;
}

template <class C>
HalfLaurent<C> det_poly(const PolyMatrix<C>& m) {
    if constexpr (ring_traits<C>::is_exact)
        return det_exact(m);
    else
        return det_numeric(m);
}

// quotient of the two determinants, before normalization
template <class C>
RationalFunction<typename field_of<C>::type> wada_invariant(const Presentation& p,
                                                            const Representation<C>& rho,
                                                            int k) {
    GroupRingElement xk_minus_1 =
        GroupRingElement::from_word(Word::generator(k)) - GroupRingElement::one();
    auto den = det_poly(phi_apply(xk_minus_1, p, rho));
    if (den.is_zero())
        throw vanishing_denominator("det Phi(x_" + std::to_string(k) + " - 1) vanishes");
    auto num = det_poly(fox_jacobian_minor(p, rho, k));
    return RationalFunction<typename field_of<C>::type>::make(hl_to_field(num),
                                                              hl_to_field(den));
}

// Sign and degree data of the two auxiliary specializations at column k: the
// augmented Jacobian minor (an integer determinant, sign delta) and the
// abelianized minor (a Laurent polynomial whose degree midpoint gives d).
// Both vanishing are degeneracies, not expected for knot presentations.
struct NormalizationData {
    int k;
    int delta; // +1 or -1
    int d2;    // doubled: d = d2/2
};

inline NormalizationData normalization_data(const Presentation& p, int k) {
    if (k < 1 || k > p.num_gens()) throw std::invalid_argument("column index");
    long long ak = p.alpha(k);
    if (ak == 0)
        throw degenerate_error("column " + std::to_string(k) + " has zero abelian image");
    int rel = p.num_relators();

    PolyMatrix<Int> aug(rel, rel);
    PolyMatrix<Int> abel(rel, rel);
    for (int i = 0; i < rel; ++i) {
        int out_j = 0;
        for (int j = 0; j < p.num_gens(); ++j) {
            if (j == k - 1) continue;
            GroupRingElement der = fox_derivative(p.relators()[i], j + 1);
            Int aug_sum = 0;
            HalfLaurent<Int> abel_image;
            for (const auto& [w, c] : der.terms()) {
                aug_sum += c;
                abel_image.add_term(static_cast<int>(2 * p.alpha_of(w)), c);
            }
            aug.at(i, out_j) = HalfLaurent<Int>::constant(aug_sum);
            abel.at(i, out_j) = std::move(abel_image);
            ++out_j;
        }
    }
    HalfLaurent<Int> aug_det = det_exact(aug);
    if (aug_det.is_zero())
        throw degenerate_error("augmented Jacobian minor at column " + std::to_string(k) +
                               " is singular");
    Int aug_value = aug_det.lc();
    bool negative = (aug_value < 0) != (ak < 0);
    int delta = negative ? -1 : +1;

    HalfLaurent<Int> abel_det = det_exact(abel);
    if (abel_det.is_zero())
        throw degenerate_error("abelianized Jacobian minor at column " + std::to_string(k) +
                               " is singular");
    int mid2 = abel_det.hdeg2() + abel_det.ldeg2();
    if (mid2 % 2 != 0) throw std::logic_error("abelianized minor has odd degree sum");
    int d2 = mid2 / 2 - static_cast<int>(ak);
    return NormalizationData{k, delta, d2};
}

// Normalized invariant: delta^n * (eps t^n)^(-d) * wada.  The half power of
// eps stays formal as (eps, eps_power2/2); the t-shift and the sign land in
// value.  k records the column that was used.
template <class C>
struct NormalizedInvariant {
    using F = typename field_of<C>::type;
    RationalFunction<F> value;
    F eps;
    int eps_power2 = 0;
    int n = 1;
    int k = 0;
    int delta = 0;
    int d2 = 0;
    bool zero = false;
};

template <class C>
typename field_of<C>::type field_cast(const C& x) {
    if constexpr (std::is_same_v<C, Int>)
        return Rat(x);
    else
        return x;
}

template <class C>
NormalizedInvariant<C> normalized_invariant_at(const Presentation& p,
                                               const Representation<C>& rho, int k) {
    verify_representation(p, rho);
    using F = typename field_of<C>::type;
    NormalizedInvariant<C> inv;
    inv.n = rho.dim();
    inv.eps = field_cast(rho.word_image(p, p.meridian()).det());
    RationalFunction<F> wada = wada_invariant(p, rho, k);
    if (wada.is_zero()) { // twisted homology does not vanish; nothing to normalize
        inv.zero = true;
        inv.k = k;
        return inv;
    }
    NormalizationData nd = normalization_data(p, k);
    Int sign = (nd.delta == -1 && inv.n % 2 == 1) ? Int(-1) : Int(1);
    F scale = ring_traits<F>::from_int(sign, inv.eps);
    inv.value = wada.shifted(-inv.n * nd.d2).scaled(scale);
    inv.eps_power2 = -nd.d2;
    inv.k = nd.k;
    inv.delta = nd.delta;
    inv.d2 = nd.d2;
    inv.zero = inv.value.is_zero();
    return inv;
}

// Columns are tried in ascending index among those with nonzero abelian
// image; a vanishing denominator moves to the next column, and if every
// candidate denominator vanishes the invariant is the zero object.
template <class C>
NormalizedInvariant<C> normalized_invariant(const Presentation& p,
                                            const Representation<C>& rho) {
    verify_representation(p, rho);
    bool any_candidate = false;
    for (int k = 1; k <= p.num_gens(); ++k) {
        if (p.alpha(k) == 0) continue;
        any_candidate = true;
        try {
            return normalized_invariant_at(p, rho, k);
        } catch (const vanishing_denominator&) {
            continue;
        }
    }
    if (!any_candidate)
        throw degenerate_error("no generator has nonzero abelian image");
    NormalizedInvariant<C> inv;
    inv.n = rho.dim();
    inv.eps = field_cast(rho.word_image(p, p.meridian()).det());
    inv.zero = true;
    return inv;
}

template <class C>
NormalizedInvariant<C> conjugate_invariant(const NormalizedInvariant<C>& inv) {
    using F = typename field_of<C>::type;
    NormalizedInvariant<C> out;
    out.value = rf_conjugate(inv.value);
    out.eps = ring_traits<F>::conj(inv.eps);
    out.eps_power2 = inv.eps_power2;
    out.n = inv.n;
    out.zero = inv.zero;
    return out;
}

template <class C>
NormalizedInvariant<C> negated_invariant(const NormalizedInvariant<C>& inv) {
    using F = typename field_of<C>::type;
    NormalizedInvariant<C> out = inv;
    if (!inv.zero)
        out.value = inv.value.scaled(ring_traits<F>::from_int(Int(-1), inv.eps));
    return out;
}

template <class F>
F ring_pow(const F& base, long long e) {
    F b = e < 0 ? ring_traits<F>::inv(base) : base;
    F acc = ring_traits<F>::one(base);
    for (long long i = 0, n = e < 0 ? -e : e; i < n; ++i) acc *= b;
    return acc;
}

// Equality of the formal product value * eps^(eps_power2/2).  Integer
// differences of the eps power are folded into the ring part; a difference
// that is odd in doubled units cannot be reconciled.  When eps is 1 the
// power is ignored outright.
template <class C>
bool invariant_equal(const NormalizedInvariant<C>& a, const NormalizedInvariant<C>& b) {
    using F = typename field_of<C>::type;
    if (a.n != b.n) return false;
    if (a.zero || b.zero) return a.zero == b.zero;
    if (ring_traits<F>::is_one(a.eps) && ring_traits<F>::is_one(b.eps))
        return a.value == b.value;
    if (a.eps != b.eps) return false;
    int diff2 = a.eps_power2 - b.eps_power2;
    if (diff2 == 0) return a.value == b.value;
    if (diff2 % 2 != 0) return false;
    return a.value.scaled(ring_pow(a.eps, diff2 / 2)) == b.value;
}

} // namespace talex
