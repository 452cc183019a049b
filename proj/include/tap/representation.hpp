#ifndef TAP_REPRESENTATION_HPP
#define TAP_REPRESENTATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tap/homs.hpp"
#include "tap/permutation.hpp"
#include "tap/presentation.hpp"
#include "tap/rational.hpp"
#include "tap/words.hpp"

namespace tap {

/// Small dense integer matrix (representation matrices and their inverses).
class IntMat {
  public:
    IntMat() : n_(0) {}
    explicit IntMat(std::size_t n) : n_(n), a_(n * n) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Permutation matrix of the left multiplication action x -> p(x):
    /// entry (p(j), j) = 1.
    static IntMat permutation_matrix(const Permutation& p) {
        IntMat m(static_cast<std::size_t>(p.degree()));
        for (int j = 0; j < p.degree(); ++j)
            m.at(static_cast<std::size_t>(p(j)), static_cast<std::size_t>(j)) = 1;
        return m;
    }

    std::size_t dim() const { return n_; }
    Integer& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMat operator*(const IntMat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("IntMat product: dimension mismatch");
        IntMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Integer& v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    IntMat transpose() const {
        IntMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend bool operator==(const IntMat&, const IntMat&) = default;

    /// Inverse over Z; empty when the matrix is not invertible over Z
    /// (i.e. determinant not +-1). Gauss-Jordan over Q, then an integrality
    /// check.
    std::optional<IntMat> inverse_unimodular() const {
        const std::size_t n = n_;
        std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(at(i, j));
            w[i][n + i] = 1;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = n;
            for (std::size_t i = c; i < n; ++i)
                if (w[i][c] != 0) {
                    piv = i;
                    break;
                }
            if (piv == n) return std::nullopt;
            std::swap(w[c], w[piv]);
            const Rational inv = 1 / w[c][c];
            for (auto& v : w[c]) v *= inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || w[i][c] == 0) continue;
                const Rational f = w[i][c];
                for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
            }
        }
        IntMat out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_integer(w[i][n + j])) return std::nullopt;
                out.at(i, j) = num(w[i][n + j]);
            }
        return out;
    }

  private:
    std::size_t n_;
    std::vector<Integer> a_;
};

enum class RepProvenance { Trivial, RegularOfQuotient, User };

inline const char* to_string(RepProvenance p) {
    switch (p) {
        case RepProvenance::Trivial: return "trivial";
        case RepProvenance::RegularOfQuotient: return "regular-of-quotient";
        case RepProvenance::User: return "user";
    }
    return "?";
}

/// Assignment of invertible integer matrices to the generators of a
/// presentation. Inverses are precomputed; construction rejects matrices that
/// are not invertible over Z, and relator consistency is checked against the
/// presentation before the representation is used.
class Representation {
  public:
    static Representation trivial(std::size_t num_generators) {
        Representation r;
        r.dim_ = 1;
        r.prov_ = RepProvenance::Trivial;
        r.mats_.assign(num_generators, IntMat::identity(1));
        r.invs_ = r.mats_;
        return r;
    }

    /// Left regular representation of the image subgroup: generator g acts on
    /// Z[G] (basis = the element list of G) by left multiplication by h(g).
    static Representation regular(const FiniteGroupTable& g, const HomAssignment& h) {
        Representation r;
        r.dim_ = g.size();
        r.prov_ = RepProvenance::RegularOfQuotient;
        r.hom_ = h;
        for (const Permutation& img : h.images) {
            // Left multiplication permutes the element list.
            std::vector<int> perm(g.size());
            for (std::size_t j = 0; j < g.size(); ++j)
                perm[j] = g.index_of(img * g.element(j));
            std::vector<int> images(perm.begin(), perm.end());
            const IntMat m = IntMat::permutation_matrix(Permutation(images));
            r.mats_.push_back(m);
            r.invs_.push_back(m.transpose());  // permutation matrices are orthogonal
        }
        return r;
    }

    static Representation user(std::vector<IntMat> mats) {
        Representation r;
        r.prov_ = RepProvenance::User;
        if (mats.empty()) throw std::invalid_argument("representation: no matrices");
        r.dim_ = mats.front().dim();
        for (const IntMat& m : mats) {
            if (m.dim() != r.dim_)
                throw std::invalid_argument("representation: matrices of mixed dimension");
            auto inv = m.inverse_unimodular();
            if (!inv)
                throw std::invalid_argument(
                    "representation: matrix is not invertible over the integers");
            r.invs_.push_back(std::move(*inv));
        }
        r.mats_ = std::move(mats);
        return r;
    }

    std::size_t dimension() const { return dim_; }
    std::size_t num_generators() const { return mats_.size(); }
    RepProvenance provenance() const { return prov_; }
    const std::optional<HomAssignment>& hom() const { return hom_; }

    const IntMat& matrix(std::size_t gen) const { return mats_.at(gen); }
    const IntMat& inverse(std::size_t gen) const { return invs_.at(gen); }

    /// alpha(w): product of generator matrices along the word.
    IntMat evaluate(const FreeWord& w) const {
        IntMat acc = IntMat::identity(dim_);
        for (const Letter& l : w.letters()) {
            const std::size_t g = static_cast<std::size_t>(l.gen);
            if (g >= mats_.size())
                throw std::out_of_range("representation: word uses unknown generator");
            acc = acc * (l.sign > 0 ? mats_[g] : invs_[g]);
        }
        return acc;
    }

    /// Every relator must map to the identity matrix.
    bool consistent_with(const Presentation& p) const {
        if (p.num_generators() != mats_.size()) return false;
        for (const FreeWord& r : p.relators())
            if (!evaluate(r).is_identity()) return false;
        return true;
    }

    void require_consistent_with(const Presentation& p) const {
        if (!consistent_with(p))
            throw std::invalid_argument("representation is not relator-consistent");
    }

  private:
    std::size_t dim_ = 0;
    RepProvenance prov_ = RepProvenance::Trivial;
    std::vector<IntMat> mats_, invs_;
    std::optional<HomAssignment> hom_;
};

}  // namespace tap

#endif  // TAP_REPRESENTATION_HPP
