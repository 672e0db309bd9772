#pragma once

#include <map>
#include <utility>

#include "rings.hpp"
#include "word.hpp"

namespace talex {

// Element of the integral group ring of a free group: a finite formal sum of
// reduced words with cpp_int coefficients.  Zero coefficients are never
// stored.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement from_word(const Word& w, Int coeff = Int(1)) {
        GroupRingElement e;
        e.add_term(w, std::move(coeff));
        return e;
    }

    static GroupRingElement one() { return from_word(Word()); }

    void add_term(const Word& w, Int coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }

    GroupRingElement operator-() const {
        GroupRingElement r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                r.add_term(wa * wb, ca * cb);
        return r;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
        return !(a == b);
    }

private:
    std::map<Word, Int> terms_;
};

// Fox free derivative with respect to x_j (1-based), defined by
// d(x_j)/dx_j = 1, d(x_j^-1)/dx_j = -x_j^-1 and the Leibniz rule
// d(uv) = du + u dv.  Runs left to right keeping the consumed prefix.
inline GroupRingElement fox_derivative(const Word& w, int j) {
    GroupRingElement out;
    Word prefix;
    for (auto l : w.letters()) {
        if (l == j) {
            out.add_term(prefix, Int(1));
        } else if (l == -j) {
            out.add_term(prefix * Word::generator(j, -1), Int(-1));
        }
        prefix.push(l);
    }
    return out;
}

// augmentation: coefficient sum
inline Int augmentation(const GroupRingElement& e) {
    Int s = 0;
    for (const auto& [w, c] : e.terms()) s += c;
    return s;
}

} // namespace talex
