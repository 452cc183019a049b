#ifndef TAP_WORDS_HPP
#define TAP_WORDS_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tap/rational.hpp"

namespace tap {

/// One letter of a free-group word: generator index with exponent +-1.
struct Letter {
    int gen;
    int sign;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group; the empty word is the identity.
class FreeWord {
  public:
    FreeWord() = default;

    static FreeWord generator(int gen, int sign = 1) {
        FreeWord w;
        w.push(Letter{gen, sign});
        return w;
    }

    static FreeWord from_letters(const std::vector<Letter>& ls) {
        FreeWord w;
        for (const Letter& l : ls) w.push(l);
        return w;
    }

    const std::vector<Letter>& letters() const { return ls_; }
    bool is_identity() const { return ls_.empty(); }
    std::size_t length() const { return ls_.size(); }

    /// Largest generator index appearing, or -1 for the identity.
    int max_gen() const {
        int m = -1;
        for (const Letter& l : ls_) m = std::max(m, l.gen);
        return m;
    }

    FreeWord operator*(const FreeWord& o) const {
        FreeWord r = *this;
        for (const Letter& l : o.ls_) r.push(l);
        return r;
    }

    FreeWord inverse() const {
        FreeWord r;
        for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.push(Letter{it->gen, -it->sign});
        return r;
    }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
        if (auto c = a.ls_.size() <=> b.ls_.size(); c != 0) return c;
        return a.ls_ <=> b.ls_;
    }

  private:
    void push(const Letter& l) {
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
        if (!ls_.empty() && ls_.back().gen == l.gen && ls_.back().sign == -l.sign)
            ls_.pop_back();  // free cancellation at the seam
        else
            ls_.push_back(l);
    }

    std::vector<Letter> ls_;
};

/// Formal Z-linear combination of free-group words (an element of the group
/// ring of the free group). Words are stored freely reduced; no zero terms.
class GroupRingElement {
  public:
    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }

    static GroupRingElement word(const FreeWord& w, const Integer& c = 1) {
        GroupRingElement e;
        if (c != 0) e.terms_[w] = c;
        return e;
    }

    static GroupRingElement one() { return word(FreeWord()); }

    const std::map<FreeWord, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }

    GroupRingElement& operator-=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        return a -= b;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
        return r;
    }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  private:
    void add(const FreeWord& w, const Integer& c) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<FreeWord, Integer> terms_;
};

/// Fox free derivative d(w)/d(x_gen), defined by
///   d(x)/d(x) = 1,  d(y)/d(x) = 0 for y != x,  d(x^-1)/d(x) = -x^-1,
/// and the product rule d(uv)/d(x) = d(u)/d(x) + u * d(v)/d(x).
///
/// num_gens bounds the generator alphabet: gen and every letter of w must lie
/// in [0, num_gens).
inline GroupRingElement fox_derivative(const FreeWord& w, int gen, int num_gens) {
    if (gen < 0 || gen >= num_gens) throw std::out_of_range("fox_derivative: unknown generator");
    GroupRingElement acc;
    FreeWord prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen >= num_gens)
            throw std::out_of_range("fox_derivative: word uses unknown generator");
        if (l.gen == gen) {
            if (l.sign > 0) {
                acc += GroupRingElement::word(prefix);
            } else {
                acc -= GroupRingElement::word(prefix * FreeWord::generator(gen, -1));
            }
        }
        prefix = prefix * FreeWord::generator(l.gen, l.sign);
    }
    return acc;
}

}  // namespace tap

#endif  // TAP_WORDS_HPP
