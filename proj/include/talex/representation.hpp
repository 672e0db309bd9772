#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace talex {

// Linear representation of a presented group: one invertible matrix per
// generator name.  Inverses are cached on construction; images are keyed by
// name so the object survives Tietze moves that extend the generator list.
template <class C>
class Representation {
public:
    Representation() = default;
    Representation(int dim, std::map<std::string, Mat<C>> images) : n_(dim) {
        for (auto& [name, m] : images) {
            if (m.dim() != n_)
                throw verify_error("image of " + name + " is not " + std::to_string(n_) + "x" +
                                   std::to_string(n_));
            add(name, m);
        }
    }

    int dim() const { return n_; }

    bool has(const std::string& name) const { return images_.count(name) != 0; }

    const Mat<C>& image(const std::string& name) const {
        auto it = images_.find(name);
        if (it == images_.end()) throw verify_error("no image for generator " + name);
        return it->second;
    }

    const std::map<std::string, Mat<C>>& images() const { return images_; }

    void add(const std::string& name, const Mat<C>& m) {
        if (m.dim() != n_) throw verify_error("image dimension mismatch for " + name);
        Mat<C> inv;
        try {
            inv = m.inverse();
        } catch (const std::domain_error&) {
            throw verify_error("image of " + name + " is not invertible over the ring");
        }
        images_[name] = m;
        inverses_[name] = std::move(inv);
    }

    C exemplar() const {
        for (const auto& [name, m] : images_)
            if (m.dim() > 0) return m.at(0, 0);
        return C();
    }

    Mat<C> word_image(const Presentation& p, const Word& w) const {
        Mat<C> acc = Mat<C>::identity(n_, exemplar());
        for (auto l : w.letters()) {
            const std::string& name = p.gens()[std::abs(l) - 1];
            const auto& table = l > 0 ? images_ : inverses_;
            auto it = table.find(name);
            if (it == table.end()) throw verify_error("no image for generator " + name);
            acc = acc * it->second;
        }
        return acc;
    }

    // rho_dagger(g) = conjugate transpose of rho(g^-1)
    Representation dagger() const {
        Representation r;
        r.n_ = n_;
        for (const auto& [name, m] : inverses_) r.add(name, m.conj_transpose());
        return r;
    }

private:
    int n_ = 0;
    std::map<std::string, Mat<C>> images_;
    std::map<std::string, Mat<C>> inverses_;
};

// Check every relator maps to the identity; throws naming the first that
// fails.  Also insists every generator has an image.
template <class C>
void verify_representation(const Presentation& p, const Representation<C>& rho) {
    for (const auto& g : p.gens())
        if (!rho.has(g)) throw verify_error("no image for generator " + g);
    for (int i = 0; i < p.num_relators(); ++i) {
        if (!rho.word_image(p, p.relators()[i]).is_identity())
            throw verify_error("relator " + std::to_string(i + 1) + " (" +
                               word_to_string(p.relators()[i], p.gens()) +
                               ") is not satisfied by the representation");
    }
}

template <class C>
Representation<C> trivial_representation(const Presentation& p, const C& one) {
    std::map<std::string, Mat<C>> images;
    for (const auto& g : p.gens()) images[g] = Mat<C>::identity(1, one);
    return Representation<C>(1, std::move(images));
}

// Replay a Tietze move sequence on top of rho: introduced generators get the
// image of their definition word, evaluated against the presentation as it
// stood when the move was applied.
template <class C>
Representation<C> extend_through_moves(const Presentation& start, const Representation<C>& rho,
                                       const std::vector<TietzeMove>& moves) {
    Presentation p = start;
    Representation<C> out = rho;
    for (const auto& mv : moves) {
        if (mv.kind == TietzeMove::Kind::introduce)
            out.add(mv.name, out.word_image(p, mv.w));
        p = apply_move(p, mv);
    }
    return out;
}

} // namespace talex
