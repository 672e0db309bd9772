#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "smith.hpp"
#include "word.hpp"

namespace talex {

// Finite presentation of deficiency 1 with a distinguished meridian word.
// The abelianization onto Z (generator exponents alpha, normalized so the
// meridian maps to +1) is computed at construction and never cached across
// edits: every derived presentation goes through make() again.
class Presentation {
public:
    static Presentation make(std::vector<std::string> gens, std::vector<Word> relators,
                             Word meridian) {
        Presentation p;
        p.gens_ = std::move(gens);
        p.relators_ = std::move(relators);
        p.meridian_ = std::move(meridian);
        p.validate_shape();
        p.compute_alpha();
        return p;
    }

    const std::vector<std::string>& gens() const { return gens_; }
    const std::vector<Word>& relators() const { return relators_; }
    const Word& meridian() const { return meridian_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    int num_relators() const { return static_cast<int>(relators_.size()); }

    // abelian image of generator index (1-based)
    long long alpha(int index) const { return alpha_[index - 1]; }
    const std::vector<long long>& alpha() const { return alpha_; }

    long long alpha_of(const Word& w) const {
        long long s = 0;
        for (auto l : w.letters())
            s += l > 0 ? alpha_[l - 1] : -alpha_[-l - 1];
        return s;
    }

    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == name) return static_cast<int>(i) + 1;
        return 0;
    }

private:
    void validate_shape() const {
        if (gens_.empty()) throw degenerate_error("presentation has no generators");
        std::set<std::string> seen;
        for (const auto& g : gens_) {
            if (g.empty()) throw std::invalid_argument("empty generator name");
            if (!seen.insert(g).second)
                throw std::invalid_argument("duplicate generator name: " + g);
        }
        if (relators_.size() + 1 != gens_.size())
            throw degenerate_error("presentation deficiency is not 1 (" +
                                   std::to_string(gens_.size()) + " generators, " +
                                   std::to_string(relators_.size()) + " relators)");
        for (const auto& r : relators_)
            if (r.max_index() > num_gens())
                throw std::invalid_argument("relator mentions unknown generator");
        if (meridian_.max_index() > num_gens())
            throw std::invalid_argument("meridian mentions unknown generator");
        if (meridian_.is_identity())
            throw degenerate_error("meridian word is trivial");
    }

    void compute_alpha() {
        int m = num_gens();
        int r = num_relators();
        std::vector<std::vector<Int>> rel(r, std::vector<Int>(m, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < m; ++j)
                rel[i][j] = Int(relators_[i].exponent_sum(j + 1));
        auto snf = smith_column_form(std::move(rel), r, m);
        for (const auto& d : snf.diag)
            if (d != 1 && d != -1)
                throw degenerate_error(
                    "abelianization is not infinite cyclic (input is not a knot group "
                    "presentation)");
        alpha_.assign(m, 0);
        for (int j = 0; j < m; ++j) {
            const Int& e = snf.v[j][m - 1];
            if (e < std::numeric_limits<long long>::min() ||
                e > std::numeric_limits<long long>::max())
                throw degenerate_error("abelianization exponents out of range");
            alpha_[j] = e.convert_to<long long>();
        }
        long long mu = alpha_of(meridian_);
        if (mu == -1) {
            for (auto& x : alpha_) x = -x;
            mu = 1;
        }
        if (mu != 1)
            throw degenerate_error("meridian abelian image is " + std::to_string(mu) +
                                   ", expected a generator of H_1");
        for (const auto& rel_word : relators_)
            if (alpha_of(rel_word) != 0)
                throw std::logic_error("abelianization does not kill a relator");
    }

    std::vector<std::string> gens_;
    std::vector<Word> relators_;
    Word meridian_;
    std::vector<long long> alpha_;
};

// ---- planar diagram input -------------------------------------------------

// One crossing: the under-strand enters at edge a and leaves at edge c; the
// over-strand occupies edges b and d.  sign +1 means the over-strand runs
// b -> d, sign -1 means d -> b.
struct PDCrossing {
    int a, b, c, d;
    int sign;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
};

// Wirtinger presentation of a one-component diagram: one generator per arc,
// one relator per crossing with the last relator dropped, meridian x1.  At a
// positive crossing the under-arc pair (A in, C out) satisfies o A o^-1 = C,
// at a negative one o^-1 A o = C, where o is the over-arc.
inline Presentation wirtinger_from_pd(const PDCode& pd) {
    int c = static_cast<int>(pd.crossings.size());
    if (c == 0)
        return Presentation::make({"x1"}, {}, Word::generator(1));

    int edges = 2 * c;
    auto check_edge = [&](int e) {
        if (e < 1 || e > edges)
            throw parse_error("PD edge label " + std::to_string(e) + " outside 1.." +
                              std::to_string(edges));
    };
    std::vector<int> in_count(edges + 1, 0), out_count(edges + 1, 0);
    std::vector<int> successor(edges + 1, 0);
    for (const auto& x : pd.crossings) {
        check_edge(x.a);
        check_edge(x.b);
        check_edge(x.c);
        check_edge(x.d);
        int over_in = x.sign > 0 ? x.b : x.d;
        int over_out = x.sign > 0 ? x.d : x.b;
        ++in_count[x.a];
        ++in_count[over_in];
        ++out_count[x.c];
        ++out_count[over_out];
        successor[x.a] = x.c;
        successor[over_in] = over_out;
    }
    for (int e = 1; e <= edges; ++e)
        if (in_count[e] != 1 || out_count[e] != 1)
            throw parse_error("PD edge " + std::to_string(e) +
                              " does not appear once incoming and once outgoing");
    int at = 1, steps = 0;
    do {
        at = successor[at];
        ++steps;
    } while (at != 1 && steps <= edges);
    if (steps != edges)
        throw parse_error("PD code does not describe a single closed component");

    // arcs: over-strand passage joins its two edges
    std::vector<int> parent(edges + 1);
    for (int e = 1; e <= edges; ++e) parent[e] = e;
    std::function<int(int)> find = [&](int e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    for (const auto& x : pd.crossings) parent[find(x.b)] = find(x.d);

    std::map<int, int> arc_min; // representative -> smallest member edge
    for (int e = 1; e <= edges; ++e) {
        int r = find(e);
        if (arc_min.find(r) == arc_min.end()) arc_min[r] = e;
    }
    if (static_cast<int>(arc_min.size()) != c)
        throw parse_error("PD code has " + std::to_string(arc_min.size()) + " arcs for " +
                          std::to_string(c) + " crossings");
    std::vector<std::pair<int, int>> order; // (min edge, representative)
    for (const auto& [rep, mn] : arc_min) order.emplace_back(mn, rep);
    std::sort(order.begin(), order.end());
    std::map<int, int> arc_index; // representative -> generator index (1-based)
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < order.size(); ++i) {
        arc_index[order[i].second] = static_cast<int>(i) + 1;
        gens.push_back("x" + std::to_string(i + 1));
    }
    auto arc_of = [&](int e) { return arc_index.at(find(e)); };

    std::vector<Word> relators;
    for (const auto& x : pd.crossings) {
        int o = arc_of(x.b);
        int in = arc_of(x.a);
        int out = arc_of(x.c);
        Word w;
        if (x.sign > 0) {
            w.push(o);
            w.push(in);
            w.push(-o);
            w.push(-out);
        } else {
            w.push(-o);
            w.push(in);
            w.push(o);
            w.push(-out);
        }
        relators.push_back(w);
    }
    relators.pop_back();
    return Presentation::make(std::move(gens), std::move(relators), Word::generator(1));
}

// ---- Tietze moves ---------------------------------------------------------

inline Presentation invert_relator(const Presentation& p, int i) {
    if (i < 1 || i > p.num_relators()) throw std::invalid_argument("relator index");
    auto rel = p.relators();
    rel[i - 1] = rel[i - 1].inverse();
    return Presentation::make(p.gens(), std::move(rel), p.meridian());
}

inline Presentation conjugate_relator(const Presentation& p, int i, const Word& w) {
    if (i < 1 || i > p.num_relators()) throw std::invalid_argument("relator index");
    if (w.max_index() > p.num_gens()) throw std::invalid_argument("conjugator out of range");
    auto rel = p.relators();
    rel[i - 1] = rel[i - 1].conjugated_by(w);
    return Presentation::make(p.gens(), std::move(rel), p.meridian());
}

inline Presentation multiply_relators(const Presentation& p, int i, int j) {
    if (i < 1 || i > p.num_relators() || j < 1 || j > p.num_relators() || i == j)
        throw std::invalid_argument("relator indices");
    auto rel = p.relators();
    rel[i - 1] = rel[i - 1] * rel[j - 1];
    return Presentation::make(p.gens(), std::move(rel), p.meridian());
}

inline Presentation introduce_generator(const Presentation& p, const std::string& name,
                                        const Word& w) {
    if (p.generator_index(name) != 0)
        throw std::invalid_argument("generator name already used: " + name);
    if (w.max_index() > p.num_gens())
        throw std::invalid_argument("definition word out of range");
    auto gens = p.gens();
    gens.push_back(name);
    auto rel = p.relators();
    Word r = Word::generator(p.num_gens() + 1) * w.inverse();
    rel.push_back(std::move(r));
    return Presentation::make(std::move(gens), std::move(rel), p.meridian());
}

struct TietzeMove {
    enum class Kind { invert, conjugate, multiply, introduce };
    Kind kind;
    int i = 0, j = 0;
    Word w;
    std::string name;
    std::string text; // rendered against the presentation it was applied to
};

inline Presentation apply_move(const Presentation& p, const TietzeMove& m) {
    switch (m.kind) {
        case TietzeMove::Kind::invert: return invert_relator(p, m.i);
        case TietzeMove::Kind::conjugate: return conjugate_relator(p, m.i, m.w);
        case TietzeMove::Kind::multiply: return multiply_relators(p, m.i, m.j);
        case TietzeMove::Kind::introduce: return introduce_generator(p, m.name, m.w);
    }
    throw std::logic_error("unreachable");
}

struct TietzeRun {
    Presentation result;
    std::vector<TietzeMove> moves;
};

inline std::string word_to_string(const Word& w, const std::vector<std::string>& gens) {
    if (w.is_identity()) return "1";
    std::string out;
    for (auto l : w.letters()) {
        if (!out.empty()) out += " ";
        out += gens[std::abs(l) - 1];
        if (l < 0) out += "'";
    }
    return out;
}

// Deterministic random move sequence; raw engine outputs are reduced by
// modulus so the stream is identical across standard library
// implementations.
inline TietzeRun random_tietze_run(const Presentation& start, int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    TietzeRun run{start, {}};
    int fresh = 0;
    const std::size_t relator_cap = 256;

    for (int s = 0; s < steps; ++s) {
        const Presentation& p = run.result;
        int m = p.num_relators();
        std::vector<TietzeMove::Kind> bag;
        auto add = [&](TietzeMove::Kind k, int weight) {
            for (int t = 0; t < weight; ++t) bag.push_back(k);
        };
        if (m >= 1) add(TietzeMove::Kind::invert, 25);
        if (m >= 1) add(TietzeMove::Kind::conjugate, 30);
        if (m >= 2) add(TietzeMove::Kind::multiply, 25);
        add(TietzeMove::Kind::introduce, 20);

        TietzeMove mv;
        mv.kind = bag[pick(bag.size())];
        switch (mv.kind) {
            case TietzeMove::Kind::invert: {
                mv.i = static_cast<int>(pick(m)) + 1;
                mv.text = "invert r" + std::to_string(mv.i);
                break;
            }
            case TietzeMove::Kind::conjugate: {
                mv.i = static_cast<int>(pick(m)) + 1;
                int idx = static_cast<int>(pick(p.num_gens())) + 1;
                mv.w = Word::generator(idx, pick(2) == 0 ? +1 : -1);
                mv.text = "conjugate r" + std::to_string(mv.i) + " by " +
                          word_to_string(mv.w, p.gens());
                break;
            }
            case TietzeMove::Kind::multiply: {
                for (int attempt = 0;; ++attempt) {
                    mv.i = static_cast<int>(pick(m)) + 1;
                    mv.j = static_cast<int>(pick(m)) + 1;
                    if (mv.i == mv.j) continue;
                    if (p.relators()[mv.i - 1].length() + p.relators()[mv.j - 1].length() <=
                            relator_cap ||
                        attempt > 8)
                        break;
                }
                mv.text = "multiply r" + std::to_string(mv.i) + " by r" + std::to_string(mv.j);
                break;
            }
            case TietzeMove::Kind::introduce: {
                do {
                    ++fresh;
                    mv.name = "g" + std::to_string(fresh);
                } while (p.generator_index(mv.name) != 0);
                int len = 1 + static_cast<int>(pick(2));
                Word w;
                for (int t = 0; t < len; ++t) {
                    int idx = static_cast<int>(pick(p.num_gens())) + 1;
                    w.push(pick(2) == 0 ? idx : -idx);
                }
                if (w.is_identity()) w = Word::generator(1);
                mv.w = w;
                mv.text = "introduce " + mv.name + " = " + word_to_string(w, p.gens());
                break;
            }
        }
        run.result = apply_move(run.result, mv);
        run.moves.push_back(std::move(mv));
    }
    return run;
}

} // namespace talex
