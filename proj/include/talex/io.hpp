#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "applications.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "twisted.hpp"

namespace talex {

namespace detail {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

inline long long parse_int_token(const std::string& s, const std::string& file, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + s + "'", file, line);
    }
}

} // namespace detail

// ---- words and presentations ----------------------------------------------

// token forms: name, name', name^k
inline Word parse_word(const std::vector<std::string>& tokens, std::size_t first,
                       const std::vector<std::string>& gens, const std::string& file, int line) {
    Word w;
    for (std::size_t t = first; t < tokens.size(); ++t) {
        std::string tok = tokens[t];
        int exponent = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            exponent = static_cast<int>(
                detail::parse_int_token(tok.substr(caret + 1), file, line));
            tok.erase(caret);
        } else if (!tok.empty() && tok.back() == '\'') {
            exponent = -1;
            tok.pop_back();
        }
        int index = 0;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (gens[g] == tok) index = static_cast<int>(g) + 1;
        if (index == 0) throw parse_error("unknown generator '" + tok + "'", file, line);
        if (exponent == 0) throw parse_error("zero exponent on '" + tok + "'", file, line);
        w = w * Word::generator(index).pow(exponent);
    }
    return w;
}

inline Presentation parse_presentation(std::istream& in, const std::string& file) {
    auto lines = detail::tokenize_lines(in);
    std::vector<std::string> gens;
    bool have_gens = false, have_meridian = false;
    std::vector<std::pair<int, std::vector<std::string>>> relator_lines;
    std::vector<std::string> meridian_tokens;
    int meridian_line = 0;

    for (const auto& line : lines) {
        if (line.tokens[0] == "gens:") {
            if (have_gens) throw parse_error("duplicate gens: line", file, line.number);
            gens.assign(line.tokens.begin() + 1, line.tokens.end());
            if (gens.empty()) throw parse_error("gens: line lists no names", file, line.number);
            have_gens = true;
        } else if (line.tokens[0] == "meridian:") {
            if (have_meridian)
                throw parse_error("duplicate meridian: line", file, line.number);
            meridian_tokens.assign(line.tokens.begin() + 1, line.tokens.end());
            meridian_line = line.number;
            have_meridian = true;
        } else {
            relator_lines.emplace_back(line.number, line.tokens);
        }
    }
    if (!have_gens) throw parse_error("missing gens: line", file, 1);
    if (!have_meridian) throw parse_error("missing meridian: line", file, 1);

    std::vector<Word> relators;
    for (const auto& [number, tokens] : relator_lines) {
        Word r = parse_word(tokens, 0, gens, file, number);
        if (r.is_identity())
            throw parse_error("relator reduces to the empty word", file, number);
        relators.push_back(std::move(r));
    }
    Word meridian = parse_word(meridian_tokens, 0, gens, file, meridian_line);
    try {
        return Presentation::make(std::move(gens), std::move(relators), std::move(meridian));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), file, 1);
    }
}

inline PDCode parse_pd(std::istream& in, const std::string& file) {
    auto lines = detail::tokenize_lines(in);
    PDCode pd;
    for (const auto& line : lines) {
        if (line.tokens[0] != "X")
            throw parse_error("expected a crossing line starting with X", file, line.number);
        if (line.tokens.size() != 6)
            throw parse_error("crossing needs 4 edges and a sign", file, line.number);
        PDCrossing x;
        x.a = static_cast<int>(detail::parse_int_token(line.tokens[1], file, line.number));
        x.b = static_cast<int>(detail::parse_int_token(line.tokens[2], file, line.number));
        x.c = static_cast<int>(detail::parse_int_token(line.tokens[3], file, line.number));
        x.d = static_cast<int>(detail::parse_int_token(line.tokens[4], file, line.number));
        const std::string& s = line.tokens[5];
        if (s == "+")
            x.sign = +1;
        else if (s == "-")
            x.sign = -1;
        else
            throw parse_error("crossing sign must be + or -", file, line.number);
        pd.crossings.push_back(x);
    }
    return pd;
}

// Sniff the grammar: a gens: line means a presentation, X lines mean a
// diagram, and a file with no content lines is the zero-crossing diagram of
// the unknot.
inline Presentation load_topology(std::istream& in, const std::string& file) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::istringstream probe(text);
    auto lines = detail::tokenize_lines(probe);
    std::istringstream again(text);
    if (lines.empty()) return wirtinger_from_pd(PDCode{});
    if (lines[0].tokens[0] == "gens:" || lines[0].tokens[0] == "meridian:")
        return parse_presentation(again, file);
    if (lines[0].tokens[0] == "X") {
        try {
            return wirtinger_from_pd(parse_pd(again, file));
        } catch (const parse_error& e) {
            if (e.file().empty()) throw parse_error(e.what(), file, 1);
            throw;
        }
    }
    throw parse_error("cannot tell a presentation (gens:) from a diagram (X ...)", file,
                      lines[0].number);
}

inline Presentation load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return load_topology(in, path);
}

// ---- representations -------------------------------------------------------

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline Cx parse_complex(const std::string& s, const std::string& file, int line) {
    auto fail = [&]() { throw parse_error("bad complex literal '" + s + "'", file, line); };
    if (s.empty()) fail();
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i; // the last such sign separates the imaginary part
    }
    auto parse_part = [&](std::string core, bool imag) -> double {
        if (imag) {
            if (core.empty() || core.back() != 'i') fail();
            core.pop_back();
            if (core.empty() || core == "+")
                core = "1";
            else if (core == "-")
                core = "-1";
        }
        try {
            std::size_t used = 0;
            double v = std::stod(core, &used);
            if (used != core.size()) fail();
            return v;
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            fail();
        }
        return 0.0; // unreachable
    };
    bool has_i = s.back() == 'i';
    if (split == std::string::npos) {
        if (has_i) return Cx(0.0, parse_part(s, true));
        return Cx(parse_part(s, false), 0.0);
    }
    if (!has_i) fail();
    return Cx(parse_part(s.substr(0, split), false), parse_part(s.substr(split), true));
}

struct ParsedRepresentation {
    int dim = 0;
    std::string ring; // literal: Z, Q, F<p>, C
    std::variant<Representation<Int>, Representation<Rat>, Representation<Fp>, Representation<Cx>>
        rep;
};

namespace detail {

template <class C, class ParseEntry>
Representation<C> read_matrices(const std::vector<Line>& lines, std::size_t first, int dim,
                                ParseEntry&& entry, const std::string& file) {
    std::map<std::string, Mat<C>> images;
    std::size_t li = first;
    while (li < lines.size()) {
        const auto& header = lines[li];
        const std::string& htok = header.tokens[0];
        if (htok.size() < 2 || htok.back() != ':')
            throw parse_error("expected 'name:' before matrix entries", file, header.number);
        std::string name = htok.substr(0, htok.size() - 1);
        if (images.count(name))
            throw parse_error("duplicate matrix for generator " + name, file, header.number);

        std::vector<std::string> toks(header.tokens.begin() + 1, header.tokens.end());
        std::vector<int> tok_lines(toks.size(), header.number);
        std::size_t need = static_cast<std::size_t>(dim) * dim;
        ++li;
        while (toks.size() < need && li < lines.size() && lines[li].tokens[0].back() != ':') {
            for (const auto& t : lines[li].tokens) {
                toks.push_back(t);
                tok_lines.push_back(lines[li].number);
            }
            ++li;
        }
        // the entry parser may consume several tokens per entry (a mod p)
        Mat<C> m(dim);
        std::size_t pos = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (pos >= toks.size())
                    throw parse_error("matrix for " + name + " is short of entries", file,
                                      header.number);
                m.at(i, j) = entry(toks, pos, tok_lines);
            }
        if (pos != toks.size())
            throw parse_error("matrix for " + name + " has extra entries", file, header.number);
        images[name] = std::move(m);
    }
    return Representation<C>(dim, std::move(images));
}

} // namespace detail

inline ParsedRepresentation parse_representation(std::istream& in, const std::string& file) {
    auto lines = detail::tokenize_lines(in);
    ParsedRepresentation out;
    std::size_t li = 0;
    bool have_dim = false, have_ring = false;
    while (li < lines.size() && (!have_dim || !have_ring)) {
        const auto& line = lines[li];
        if (line.tokens[0] == "dim:") {
            if (line.tokens.size() != 2)
                throw parse_error("dim: takes one value", file, line.number);
            long long d = detail::parse_int_token(line.tokens[1], file, line.number);
            if (d < 1 || d > 64) throw parse_error("dim out of range", file, line.number);
            out.dim = static_cast<int>(d);
            have_dim = true;
        } else if (line.tokens[0] == "ring:") {
            if (line.tokens.size() != 2)
                throw parse_error("ring: takes one token", file, line.number);
            out.ring = line.tokens[1];
            have_ring = true;
        } else {
            throw parse_error("dim: and ring: must come before matrices", file, line.number);
        }
        ++li;
    }
    if (!have_dim) throw parse_error("missing dim: line", file, 1);
    if (!have_ring) throw parse_error("missing ring: line", file, 1);

    const std::string& ring = out.ring;
    if (ring == "Z") {
        auto entry = [&](const std::vector<std::string>& toks, std::size_t& pos,
                         const std::vector<int>& tl) -> Int {
            const std::string& s = toks[pos];
            int line = tl[pos];
            ++pos;
            try {
                return Int(s);
            } catch (const std::exception&) {
                throw parse_error("bad integer '" + s + "'", file, line);
            }
        };
        out.rep = detail::read_matrices<Int>(lines, li, out.dim, entry, file);
    } else if (ring == "Q") {
        auto entry = [&](const std::vector<std::string>& toks, std::size_t& pos,
                         const std::vector<int>& tl) -> Rat {
            const std::string& s = toks[pos];
            int line = tl[pos];
            ++pos;
            try {
                auto slash = s.find('/');
                if (slash == std::string::npos) return Rat(Int(s));
                Int num(s.substr(0, slash));
                Int den(s.substr(slash + 1));
                if (den == 0) throw std::invalid_argument("zero denominator");
                return Rat(num, den);
            } catch (const parse_error&) {
                throw;
            } catch (const std::exception&) {
                throw parse_error("bad rational '" + s + "'", file, line);
            }
        };
        out.rep = detail::read_matrices<Rat>(lines, li, out.dim, entry, file);
    } else if (ring.size() > 1 && ring[0] == 'F') {
        std::uint64_t p = 0;
        try {
            p = std::stoull(ring.substr(1));
        } catch (const std::exception&) {
            throw parse_error("bad ring token '" + ring + "'", file, 1);
        }
        if (p >= (1ull << 31) || !is_prime_u64(p))
            throw parse_error("modulus in '" + ring + "' is not a small prime", file, 1);
        auto entry = [&, p](const std::vector<std::string>& toks, std::size_t& pos,
                            const std::vector<int>& tl) -> Fp {
            const std::string& s = toks[pos];
            int line = tl[pos];
            ++pos;
            long long v = detail::parse_int_token(s, file, line);
            if (pos + 1 < toks.size() && toks[pos] == "mod") {
                long long q = detail::parse_int_token(toks[pos + 1], file, tl[pos + 1]);
                if (q != static_cast<long long>(p))
                    throw parse_error("literal modulus " + std::to_string(q) +
                                          " disagrees with ring " + ring,
                                      file, line);
                pos += 2;
            }
            long long r = v % static_cast<long long>(p);
            if (r < 0) r += static_cast<long long>(p);
            return Fp(static_cast<std::uint64_t>(r), p);
        };
        out.rep = detail::read_matrices<Fp>(lines, li, out.dim, entry, file);
    } else if (ring == "C") {
        auto entry = [&](const std::vector<std::string>& toks, std::size_t& pos,
                         const std::vector<int>& tl) -> Cx {
            const std::string& s = toks[pos];
            int line = tl[pos];
            ++pos;
            return parse_complex(s, file, line);
        };
        out.rep = detail::read_matrices<Cx>(lines, li, out.dim, entry, file);
    } else {
        throw parse_error("unknown ring '" + ring + "' (use Z, Q, F<p>, C)", file, 1);
    }
    return out;
}

inline ParsedRepresentation parse_representation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_representation(in, path);
}

// ---- rendering -------------------------------------------------------------

inline std::string half_exponent_string(int doubled) { return detail::half_string(doubled); }

template <class C>
std::string invariant_to_text(const NormalizedInvariant<C>& inv) {
    using F = typename field_of<C>::type;
    std::string out;
    out += "value: " + to_string(inv.value) + "\n";
    out += "n: " + std::to_string(inv.n) + "\n";
    out += "epsilon: " + ring_traits<F>::to_string(inv.eps) + "\n";
    out += "epsilon_power: " + detail::half_string(inv.eps_power2) + "\n";
    if (!inv.zero) {
        Degrees d = inv.value.degrees();
        out += "k: " + std::to_string(inv.k) + "\n";
        out += "delta: " + std::to_string(inv.delta) + "\n";
        out += "d: " + detail::half_string(inv.d2) + "\n";
        out += "deg: " + detail::half_string(d.deg2()) + "\n";
        out += "hdeg: " + detail::half_string(d.hdeg2) + "\n";
        out += "ldeg: " + detail::half_string(d.ldeg2) + "\n";
        out += "c: " + ring_traits<F>::to_string(inv.value.lead()) + "\n";
    }
    return out;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : data) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

template <class C>
std::string record_text(const NormalizedInvariant<C>& inv, const std::string& ring,
                        const std::string& pres_hash, const std::string& rep_hash) {
    std::string out;
    out += "record: talex/1\n";
    out += "presentation_hash: " + pres_hash + "\n";
    out += "representation_hash: " + rep_hash + "\n";
    out += "ring: " + ring + "\n";
    out += invariant_to_text(inv);
    return out;
}

} // namespace talex
