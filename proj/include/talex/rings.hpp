#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace talex {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Prime field element with the modulus carried at runtime.  A
// default-constructed element is an unbound 0; unbound values appear only as
// accumulation seeds and bind to a modulus on first contact with a bound
// value.  All arithmetic requires matching moduli.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0; // 0 = unbound

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value), p(modulus) {
        if (p == 0) throw std::logic_error("Fp: zero modulus");
        v %= p;
    }

    static Fp unbound(std::uint64_t raw) {
        Fp x;
        x.v = raw;
        return x;
    }

    bool bound() const { return p != 0; }

    Fp bind(std::uint64_t modulus) const {
        if (p != 0) {
            if (p != modulus) throw std::logic_error("Fp: modulus mismatch");
            return *this;
        }
        return Fp(v, modulus);
    }

    friend std::uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p)
            throw std::logic_error("Fp: modulus mismatch");
        return a.p != 0 ? a.p : b.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) return unbound(a.v + b.v);
        Fp x = a.bind(m), y = b.bind(m);
        return Fp((x.v + y.v) % m, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) {
            if (b.v > a.v) throw std::logic_error("Fp: unbound subtraction underflow");
            return unbound(a.v - b.v);
        }
        Fp x = a.bind(m), y = b.bind(m);
        return Fp((x.v + m - y.v) % m, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) return unbound(a.v * b.v);
        Fp x = a.bind(m), y = b.bind(m);
        return Fp((static_cast<unsigned __int128>(x.v) * y.v) % m, m);
    }
    Fp operator-() const {
        if (p == 0) {
            if (v == 0) return *this;
            throw std::logic_error("Fp: unbound negation");
        }
        return Fp(p - v, p);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint64_t m = common_modulus(a, b);
        if (m == 0) return a.v == b.v;
        return a.bind(m).v == b.bind(m).v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

// Complex double with a declared tolerance: |z| <= tolerance counts as zero
// and equality means the difference is zero.  Keeps numeric determinant
// output stable under the evaluation/interpolation round trip.
struct Cx {
    static constexpr double tolerance = 1e-9;

    std::complex<double> v{0.0, 0.0};

    Cx() = default;
    Cx(double re) : v(re, 0.0) {}
    Cx(double re, double im) : v(re, im) {}
    Cx(std::complex<double> z) : v(z) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return Cx(a.v + b.v); }
    friend Cx operator-(const Cx& a, const Cx& b) { return Cx(a.v - b.v); }
    friend Cx operator*(const Cx& a, const Cx& b) { return Cx(a.v * b.v); }
    Cx operator-() const { return Cx(-v); }
    Cx& operator+=(const Cx& o) { v += o.v; return *this; }
    Cx& operator-=(const Cx& o) { v -= o.v; return *this; }
    Cx& operator*=(const Cx& o) { v *= o.v; return *this; }

    friend bool operator==(const Cx& a, const Cx& b) {
        return std::abs(a.v - b.v) <= tolerance;
    }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

namespace detail {

inline std::string format_double(double x) {
    if (x == 0.0) x = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace detail

template <class C>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static constexpr bool is_exact = true;
    static constexpr bool is_field = false;
    static Int zero(const Int& = Int()) { return Int(0); }
    static Int one(const Int& = Int()) { return Int(1); }
    static bool is_zero(const Int& x) { return x == 0; }
    static bool is_one(const Int& x) { return x == 1; }
    static bool is_negative(const Int& x) { return x < 0; }
    static Int from_int(const Int& n, const Int& = Int()) { return n; }
    static Int inv(const Int& x) {
        if (x != 1 && x != -1) throw std::domain_error("Int: non-unit inverse");
        return x;
    }
    static Int conj(const Int& x) { return x; }
    static std::string to_string(const Int& x) { return x.str(); }
};

template <>
struct ring_traits<Rat> {
    static constexpr bool is_exact = true;
    static constexpr bool is_field = true;
    static Rat zero(const Rat& = Rat()) { return Rat(0); }
    static Rat one(const Rat& = Rat()) { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool is_one(const Rat& x) { return x == 1; }
    static bool is_negative(const Rat& x) { return x < 0; }
    static Rat from_int(const Int& n, const Rat& = Rat()) { return Rat(n); }
    static Rat inv(const Rat& x) {
        if (x == 0) throw std::domain_error("Rat: zero inverse");
        return 1 / x;
    }
    static Rat conj(const Rat& x) { return x; }
    static std::string to_string(const Rat& x) {
        std::ostringstream os;
        os << x;
        return os.str();
    }
};

template <>
struct ring_traits<Fp> {
    static constexpr bool is_exact = true;
    static constexpr bool is_field = true;
    static Fp zero(const Fp& like = Fp()) {
        return like.bound() ? Fp(0, like.p) : Fp();
    }
    static Fp one(const Fp& like = Fp()) {
        return like.bound() ? Fp(1, like.p) : Fp::unbound(1);
    }
    static bool is_zero(const Fp& x) { return x.v == 0; }
    static bool is_one(const Fp& x) { return x.v == 1; }
    static bool is_negative(const Fp&) { return false; }
    static Fp from_int(const Int& n, const Fp& like) {
        if (!like.bound()) {
            if (n == 0) return Fp();
            if (n == 1) return Fp::unbound(1);
            throw std::logic_error("Fp: from_int without modulus");
        }
        Int r = n % Int(like.p);
        if (r < 0) r += Int(like.p);
        return Fp(r.convert_to<std::uint64_t>(), like.p);
    }
    static Fp inv(const Fp& x) {
        if (!x.bound()) {
            if (x.v == 1) return x;
            throw std::logic_error("Fp: unbound inverse");
        }
        if (x.v == 0) throw std::domain_error("Fp: zero inverse");
        // extended Euclid on (v, p)
        std::int64_t a = static_cast<std::int64_t>(x.v), m = static_cast<std::int64_t>(x.p);
        std::int64_t t0 = 0, t1 = 1, r0 = m, r1 = a;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t2 = t0 - q * t1, r2 = r0 - q * r1;
            t0 = t1; t1 = t2; r0 = r1; r1 = r2;
        }
        if (r0 != 1) throw std::domain_error("Fp: non-unit inverse");
        if (t0 < 0) t0 += m;
        return Fp(static_cast<std::uint64_t>(t0), x.p);
    }
    static Fp conj(const Fp& x) { return x; }
    static std::string to_string(const Fp& x) { return std::to_string(x.v); }
};

template <>
struct ring_traits<Cx> {
    static constexpr bool is_exact = false;
    static constexpr bool is_field = true;
    static Cx zero(const Cx& = Cx()) { return Cx(); }
    static Cx one(const Cx& = Cx()) { return Cx(1.0); }
    static bool is_zero(const Cx& x) { return std::abs(x.v) <= Cx::tolerance; }
    static bool is_one(const Cx& x) { return is_zero(x - Cx(1.0)); }
    static bool is_negative(const Cx& x) {
        return std::abs(x.v.imag()) <= Cx::tolerance && x.v.real() < -Cx::tolerance;
    }
    static Cx from_int(const Int& n, const Cx& = Cx()) {
        return Cx(n.convert_to<double>());
    }
    static Cx inv(const Cx& x) {
        if (is_zero(x)) throw std::domain_error("Cx: zero inverse");
        return Cx(1.0 / x.v);
    }
    static Cx conj(const Cx& x) { return Cx(std::conj(x.v)); }
    static std::string to_string(const Cx& x) {
        double re = x.v.real(), im = x.v.imag();
        if (std::abs(im) <= Cx::tolerance) return detail::format_double(re);
        std::string imag = detail::format_double(std::abs(im)) + "i";
        if (std::abs(re) <= Cx::tolerance)
            return (im < 0 ? "-" : "") + imag;
        return detail::format_double(re) + (im < 0 ? "-" : "+") + imag;
    }
};

} // namespace talex
