#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "rings.hpp"

namespace talex {

// Square scalar matrix over a coefficient ring, for representation images.
// Dimensions stay small (the representation dimension), so inverses go
// through elimination (fields) or the adjugate (Z).
template <class C>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n, const C& fill = C()) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

    static Mat identity(int n, const C& like) {
        Mat m(n, ring_traits<C>::zero(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_traits<C>::one(like);
        return m;
    }

    int dim() const { return n_; }
    C& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const C& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("Mat: dimension mismatch");
        Mat r(x.n_, ring_traits<C>::zero(x.n_ ? x.a_[0] : C()));
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const C& xik = x.at(i, k);
                if (ring_traits<C>::is_zero(xik)) continue;
                for (int j = 0; j < x.n_; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (x.a_[i] != y.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j ? !ring_traits<C>::is_one(at(i, j))
                           : !ring_traits<C>::is_zero(at(i, j)))
                    return false;
            }
        return true;
    }

    Mat conj_transpose() const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = ring_traits<C>::conj(at(j, i));
        return r;
    }

    C det() const {
        if (n_ == 0) return ring_traits<C>::one();
        if constexpr (ring_traits<C>::is_field) {
            Mat m = *this;
            C d = ring_traits<C>::one(a_[0]);
            for (int k = 0; k < n_; ++k) {
                int piv = -1;
                for (int i = k; i < n_; ++i)
                    if (!ring_traits<C>::is_zero(m.at(i, k))) { piv = i; break; }
                if (piv < 0) return ring_traits<C>::zero(a_[0]);
                if (piv != k) {
                    for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(k, j));
                    d = -d;
                }
                d *= m.at(k, k);
                C pinv = ring_traits<C>::inv(m.at(k, k));
                for (int i = k + 1; i < n_; ++i) {
                    C f = m.at(i, k) * pinv;
                    if (ring_traits<C>::is_zero(f)) continue;
                    for (int j = k; j < n_; ++j) m.at(i, j) -= f * m.at(k, j);
                }
            }
            return d;
        } else {
            return det_laplace(*this);
        }
    }

    Mat inverse() const {
        if (n_ == 0) return *this;
        if constexpr (ring_traits<C>::is_field) {
            Mat m = *this;
            Mat r = identity(n_, a_[0]);
            for (int k = 0; k < n_; ++k) {
                int piv = -1;
                for (int i = k; i < n_; ++i)
                    if (!ring_traits<C>::is_zero(m.at(i, k))) { piv = i; break; }
                if (piv < 0) throw std::domain_error("Mat: singular");
                if (piv != k)
                    for (int j = 0; j < n_; ++j) {
                        std::swap(m.at(piv, j), m.at(k, j));
                        std::swap(r.at(piv, j), r.at(k, j));
                    }
                C pinv = ring_traits<C>::inv(m.at(k, k));
                for (int j = 0; j < n_; ++j) {
                    m.at(k, j) *= pinv;
                    r.at(k, j) *= pinv;
                }
                for (int i = 0; i < n_; ++i) {
                    if (i == k) continue;
                    C f = m.at(i, k);
                    if (ring_traits<C>::is_zero(f)) continue;
                    for (int j = 0; j < n_; ++j) {
                        m.at(i, j) -= f * m.at(k, j);
                        r.at(i, j) -= f * r.at(k, j);
                    }
                }
            }
            return r;
        } else {
            C d = det();
            C dinv = ring_traits<C>::inv(d); // throws unless a unit
            Mat r(n_, ring_traits<C>::zero(a_[0]));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    C m = minor_det(*this, j, i);
                    r.at(i, j) = ((i + j) % 2 == 0 ? m : -m) * dinv;
                }
            return r;
        }
    }

private:
    static C det_laplace(const Mat& m) {
        int n = m.n_;
        if (n == 0) return ring_traits<C>::one();
        if (n == 1) return m.at(0, 0);
        C acc = ring_traits<C>::zero(m.a_[0]);
        for (int j = 0; j < n; ++j) {
            const C& top = m.at(0, j);
            if (ring_traits<C>::is_zero(top)) continue;
            C prod = top * minor_det(m, 0, j);
            if (j % 2 == 0)
                acc += prod;
            else
                acc -= prod;
        }
        return acc;
    }

    static C minor_det(const Mat& m, int row, int col) {
        Mat s(m.n_ - 1, ring_traits<C>::zero(m.a_[0]));
        for (int i = 0, si = 0; i < m.n_; ++i) {
            if (i == row) continue;
            for (int j = 0, sj = 0; j < m.n_; ++j) {
                if (j == col) continue;
                s.at(si, sj) = m.at(i, j);
                ++sj;
            }
            ++si;
        }
        return det_laplace(s);
    }

    int n_ = 0;
    std::vector<C> a_;
};

// Rectangular matrix of half-exponent Laurent polynomials.
template <class C>
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    HalfLaurent<C>& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const HalfLaurent<C>& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    PolyMatrix without_column(int col) const {
        PolyMatrix r(rows_, cols_ - 1);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0, rj = 0; j < cols_; ++j) {
                if (j == col) continue;
                r.at(i, rj++) = at(i, j);
            }
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<HalfLaurent<C>> a_;
};

// Fraction-free (Bareiss) determinant over any exact coefficient ring.  Each
// row first has its lowest u-power factored out so the elimination runs on
// ordinary polynomials; exact divisions are checked and a failed check means
// a broken invariant, not bad input.
template <class C>
HalfLaurent<C> det_exact(const PolyMatrix<C>& m) {
    static_assert(ring_traits<C>::is_exact, "det_exact needs an exact ring");
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: non-square");
    int n = m.rows();
    HalfLaurent<C> zero;
    if (n == 0) return HalfLaurent<C>::constant(ring_traits<C>::one());

    int total_shift = 0;
    std::vector<std::vector<detail::DensePoly<C>>> w(n);
    for (int i = 0; i < n; ++i) {
        int row_low = 0;
        bool any = false;
        for (int j = 0; j < n; ++j) {
            const auto& e = m.at(i, j);
            if (e.is_zero()) continue;
            row_low = any ? std::min(row_low, e.ldeg2()) : e.ldeg2();
            any = true;
        }
        if (!any) return zero;
        total_shift += row_low;
        w[i].resize(n);
        for (int j = 0; j < n; ++j) {
            const auto& e = m.at(i, j);
            if (e.is_zero()) continue;
            int ld = 0;
            auto d = detail::dense_from_hl(e, ld);
            // reinsert the offset above the row minimum
            detail::DensePoly<C> shifted;
            shifted.c.assign(d.c.size() + (ld - row_low), ring_traits<C>::zero(d.c[0]));
            for (std::size_t t = 0; t < d.c.size(); ++t) shifted.c[t + (ld - row_low)] = d.c[t];
            w[i][j] = std::move(shifted);
        }
    }

    int sign = 1;
    detail::DensePoly<C> prev; // empty marks the first step
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!w[i][k].is_zero() && (piv < 0 || w[i][k].deg() < w[piv][k].deg())) piv = i;
        if (piv < 0) return zero;
        if (piv != k) {
            std::swap(w[piv], w[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                auto num = w[k][k] * w[i][j] - w[i][k] * w[k][j];
                w[i][j] = prev.is_zero() ? std::move(num)
                                         : detail::dense_exact_div(std::move(num), prev);
            }
            w[i][k] = detail::DensePoly<C>();
        }
        prev = w[k][k];
    }
    auto& d = w[n - 1][n - 1];
    if (d.is_zero()) return zero;
    if (sign < 0) d = d.scaled(-ring_traits<C>::one(d.c[0]));
    return detail::hl_from_dense(d, total_shift);
}

// Determinant over Cx by evaluation and interpolation: bound the exponent
// window of the result, evaluate at that many points on a circle of radius
// just off 1, LU-solve each sample, and invert the DFT.  Coefficients below
// the ring tolerance are dropped.
template <class C>
HalfLaurent<C> det_numeric(const PolyMatrix<C>& m) {
    static_assert(std::is_same_v<C, Cx>, "det_numeric runs over Cx");
    if (m.rows() != m.cols()) throw std::invalid_argument("det_numeric: non-square");
    int n = m.rows();
    if (n == 0) return HalfLaurent<C>::constant(ring_traits<C>::one());

    int hi = 0, lo = 0;
    for (int i = 0; i < n; ++i) {
        int rhi = 0, rlo = 0;
        bool any = false;
        for (int j = 0; j < n; ++j) {
            const auto& e = m.at(i, j);
            if (e.is_zero()) continue;
            rhi = any ? std::max(rhi, e.hdeg2()) : e.hdeg2();
            rlo = any ? std::min(rlo, e.ldeg2()) : e.ldeg2();
            any = true;
        }
        if (!any) return HalfLaurent<C>();
        hi += rhi;
        lo += rlo;
    }
    int count = hi - lo + 1;

    const double radius = 1.1;
    const double pi = 3.14159265358979323846;
    std::vector<std::complex<double>> samples(count);
    std::vector<std::complex<double>> points(count);
    for (int s = 0; s < count; ++s) {
        double ang = 2.0 * pi * s / count;
        points[s] = std::polar(radius, ang);
    }
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b)
            if (std::abs(points[a] - points[b]) < 1e-12)
                throw std::logic_error("det_numeric: duplicate evaluation points");

    for (int s = 0; s < count; ++s) {
        Cx u(points[s]);
        std::vector<std::complex<double>> lu(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                lu[static_cast<std::size_t>(i) * n + j] = m.at(i, j).eval_halfpower(u).v;
        std::complex<double> det = 1.0;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            for (int i = k + 1; i < n; ++i)
                if (std::abs(lu[static_cast<std::size_t>(i) * n + k]) >
                    std::abs(lu[static_cast<std::size_t>(piv) * n + k]))
                    piv = i;
            if (std::abs(lu[static_cast<std::size_t>(piv) * n + k]) == 0.0) {
                det = 0.0;
                break;
            }
            if (piv != k) {
                for (int j = 0; j < n; ++j)
                    std::swap(lu[static_cast<std::size_t>(piv) * n + j],
                              lu[static_cast<std::size_t>(k) * n + j]);
                det = -det;
            }
            det *= lu[static_cast<std::size_t>(k) * n + k];
            for (int i = k + 1; i < n; ++i) {
                auto f = lu[static_cast<std::size_t>(i) * n + k] /
                         lu[static_cast<std::size_t>(k) * n + k];
                for (int j = k; j < n; ++j)
                    lu[static_cast<std::size_t>(i) * n + j] -=
                        f * lu[static_cast<std::size_t>(k) * n + j];
            }
        }
        samples[s] = det;
    }

    HalfLaurent<C> out;
    for (int d = 0; d < count; ++d) {
        std::complex<double> acc = 0.0;
        for (int s = 0; s < count; ++s) {
            double ang = -2.0 * pi * s * (d + lo) / count;
            // divide off the radius and the sample's phase at exponent d+lo
            acc += samples[s] * std::polar(1.0, ang);
        }
        acc /= static_cast<double>(count) * std::pow(radius, d + lo);
        out.add_term(d + lo, Cx(acc));
    }
    return out;
}

} // namespace talex
