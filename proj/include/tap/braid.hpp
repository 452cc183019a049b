#ifndef TAP_BRAID_HPP
#define TAP_BRAID_HPP

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tap/presentation.hpp"
#include "tap/words.hpp"

namespace tap {

/// Braid word in the Artin generators of B_n: letters are +-1 ... +-(n-1),
/// negative meaning the inverse generator. The empty word is the identity
/// braid (its closure is the n-component unlink).
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;

    BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
        if (strands < 2) throw std::invalid_argument("braid: need at least 2 strands");
        for (int l : letters)
            if (l == 0 || l >= strands || l <= -strands)
                throw std::invalid_argument("braid: letter " + std::to_string(l) +
                                            " out of range for " + std::to_string(strands) +
                                            " strands");
    }
};

inline BraidWord mirror(const BraidWord& b) {
    BraidWord m = b;
    for (int& l : m.letters) l = -l;
    return m;
}

namespace detail {

/// Image of generator x_g under one Artin letter:
///   sigma_i:   x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
///   sigma_i^-1: x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// (indices 0-based; all other generators fixed).
inline FreeWord artin_letter_image(int letter, int gen) {
    const int i = std::abs(letter) - 1;
    const FreeWord xi = FreeWord::generator(i);
    const FreeWord xi1 = FreeWord::generator(i + 1);
    if (letter > 0) {
        if (gen == i) return xi * xi1 * xi.inverse();
        if (gen == i + 1) return xi;
    } else {
        if (gen == i) return xi1;
        if (gen == i + 1) return xi1.inverse() * xi * xi1;
    }
    return FreeWord::generator(gen);
}

inline FreeWord apply_letter(int letter, const FreeWord& w) {
    FreeWord out;
    for (const Letter& l : w.letters()) {
        FreeWord img = artin_letter_image(letter, l.gen);
        out = out * (l.sign > 0 ? img : img.inverse());
    }
    return out;
}

}  // namespace detail

/// Images of x_0..x_{n-1} under the braid automorphism, letters acting in
/// reading order (leftmost letter first).
inline std::vector<FreeWord> braid_automorphism(const BraidWord& b) {
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(b.strands));
    for (int g = 0; g < b.strands; ++g) images.push_back(FreeWord::generator(g));
    for (int letter : b.letters)
        for (FreeWord& w : images) w = detail::apply_letter(letter, w);
    return images;
}

/// Underlying permutation of the closure: strand s at the top ends at
/// perm[s] at the bottom. Cycles are the link components.
inline std::vector<int> braid_permutation(const BraidWord& b) {
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : b.letters) {
        const int i = std::abs(letter) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    }
    return perm;
}

/// Presentation of the closure's link group with one meridional generator per
/// strand: relators x_j^-1 * beta(x_j), the last one dropped (it is a
/// consequence of the others) and vacuous ones removed; phi = 1 on every
/// generator; component tags from the closure permutation cycles.
inline Presentation braid_to_presentation(const BraidWord& b, int dropped_relator = -1) {
    const std::size_t n = static_cast<std::size_t>(b.strands);
    if (dropped_relator < 0) dropped_relator = b.strands - 1;

    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));

    const std::vector<FreeWord> beta = braid_automorphism(b);
    std::vector<FreeWord> relators;
    for (std::size_t j = 0; j < n; ++j) {
        if (static_cast<int>(j) == dropped_relator) continue;
        FreeWord r = FreeWord::generator(static_cast<int>(j), -1) * beta[j];
        if (!r.is_identity()) relators.push_back(r);
    }

    // Component index of each strand = index of its permutation cycle,
    // numbered by smallest strand.
    const std::vector<int> perm = braid_permutation(b);
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int cur = static_cast<int>(s);
        while (comp[static_cast<std::size_t>(cur)] < 0) {
            comp[static_cast<std::size_t>(cur)] = next;
            cur = perm[static_cast<std::size_t>(cur)];
        }
        ++next;
    }

    return Presentation(std::move(names), std::move(relators), std::vector<int>(n, 1),
                        std::move(comp));
}

}  // namespace tap

#endif  // TAP_BRAID_HPP
