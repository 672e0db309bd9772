#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace talex {

// Freely reduced word in generators x_1, x_2, ...  A letter is +i for x_i
// and -i for its inverse (1-based), so the identity is the empty vector.
// Every mutation re-reduces, which keeps equality plain vector equality.
class Word {
public:
    Word() = default;

    static Word generator(int index, int sign = +1) {
        if (index < 1 || (sign != 1 && sign != -1))
            throw std::invalid_argument("Word: bad generator letter");
        Word w;
        w.letters_.push_back(sign * index);
        return w;
    }

    static Word from_letters(const std::vector<std::int32_t>& letters) {
        Word w;
        for (auto l : letters) w.push(l);
        return w;
    }

    void push(std::int32_t letter) {
        if (letter == 0) throw std::invalid_argument("Word: zero letter");
        if (!letters_.empty() && letters_.back() == -letter)
            letters_.pop_back();
        else
            letters_.push_back(letter);
    }

    const std::vector<std::int32_t>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    // largest generator index mentioned, 0 for the identity
    int max_index() const {
        int m = 0;
        for (auto l : letters_) m = std::max(m, std::abs(l));
        return m;
    }

    Word inverse() const {
        Word w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(-*it);
        return w;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        for (auto l : b.letters_) w.push(l);
        return w;
    }

    Word pow(int e) const {
        Word base = e < 0 ? inverse() : *this;
        Word out;
        for (int i = 0; i < std::abs(e); ++i) out = out * base;
        return out;
    }

    Word conjugated_by(const Word& u) const { return u * *this * u.inverse(); }

    // exponent sum of generator index (1-based)
    long long exponent_sum(int index) const {
        long long s = 0;
        for (auto l : letters_) {
            if (l == index) ++s;
            if (l == -index) --s;
        }
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
    std::vector<std::int32_t> letters_;
};

} // namespace talex
