#ifndef TAP_PERMUTATION_HPP
#define TAP_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace tap {

/// Permutation of {0..n-1} stored as its image array.
/// Products compose left-to-right as functions: (a*b)(x) = a(b(x)).
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || static_cast<std::size_t>(v) >= img_.size() ||
                seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("permutation: image array is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    /// Transposition (a b) in S_n.
    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    Permutation operator*(const Permutation& o) const {
        if (degree() != o.degree()) throw std::invalid_argument("permutation degree mismatch");
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            v[i] = img_[static_cast<std::size_t>(o.img_[i])];
        Permutation p;
        p.img_ = std::move(v);  // composition of bijections, skip revalidation
        return p;
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        Permutation p;
        p.img_ = std::move(v);
        return p;
    }

    Permutation conjugated_by(const Permutation& c) const {  // c * this * c^-1
        return c * (*this) * c.inverse();
    }

    /// Ascending cycle lengths, fixed points included.
    std::vector<int> cycle_type() const {
        std::vector<int> type;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            std::size_t cur = i;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = static_cast<std::size_t>(img_[cur]);
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        return type;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

  private:
    std::vector<int> img_;
};

/// All n! permutations of S_n in lexicographic image order (identity first).
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Multiplication table of a permutation group given by its element list.
/// Element 0 is the identity; the rest are sorted lexicographically.
class FiniteGroupTable {
  public:
    /// Closure of the given permutations under composition.
    static FiniteGroupTable closure(const std::vector<Permutation>& gens, int degree) {
        FiniteGroupTable g;
        const Permutation id = Permutation::identity(degree);
        std::vector<Permutation> elems{id};
        std::set<Permutation> seen{id};
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (const Permutation& s : gens) {
                for (const Permutation& p : {elems[i] * s, s * elems[i]}) {
                    if (seen.insert(p).second) elems.push_back(p);
                }
            }
        }
        std::sort(elems.begin() + 1, elems.end());
        g.elems_ = std::move(elems);
        for (std::size_t i = 0; i < g.elems_.size(); ++i) g.index_[g.elems_[i]] = static_cast<int>(i);
        return g;
    }

    std::size_t size() const { return elems_.size(); }
    const Permutation& element(std::size_t i) const { return elems_[i]; }

    int index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("element not in group");
        return it->second;
    }

    bool contains(const Permutation& p) const { return index_.count(p) > 0; }

  private:
    std::map<Permutation, int> index_;
    std::vector<Permutation> elems_;
};

}  // namespace tap

#endif  // TAP_PERMUTATION_HPP
