#ifndef TAP_HOMS_HPP
#define TAP_HOMS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tap/budget.hpp"
#include "tap/permutation.hpp"
#include "tap/presentation.hpp"

namespace tap {

/// Homomorphism from a presented group into S_n, given by generator images.
/// Every homomorphism is an epimorphism onto the subgroup its images generate;
/// image_order records that subgroup's size.
struct HomAssignment {
    int degree = 1;
    std::vector<Permutation> images;
    int image_order = 1;

    friend bool operator==(const HomAssignment&, const HomAssignment&) = default;
};

struct HomSearchOptions {
    /// Restrict the first generator to one representative per conjugacy class
    /// of S_n and the remaining generators to its conjugates. Sound (up to
    /// conjugacy of the resulting homomorphisms) exactly when all generators
    /// are conjugate in the group, e.g. meridians of a braid-closure knot.
    bool meridional = false;
    const Budget* budget = nullptr;
};

struct HomSearchResult {
    std::vector<HomAssignment> homs;
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
};

inline Permutation evaluate_word(const FreeWord& w, const std::vector<Permutation>& images,
                                 int degree) {
    Permutation acc = Permutation::identity(degree);
    for (const Letter& l : w.letters()) {
        const Permutation& g = images[static_cast<std::size_t>(l.gen)];
        acc = acc * (l.sign > 0 ? g : g.inverse());
    }
    return acc;
}

/// Relator check independent of the search's pruning (used to re-verify).
inline bool satisfies_relators(const Presentation& p, const std::vector<Permutation>& images,
                               int degree) {
    for (const FreeWord& r : p.relators())
        if (!evaluate_word(r, images, degree).is_identity()) return false;
    return true;
}

inline FiniteGroupTable image_subgroup(const HomAssignment& h) {
    return FiniteGroupTable::closure(h.images, h.degree);
}

/// Backtracking enumeration of homomorphisms into S_n. Generators are
/// assigned in presentation order; each relator is checked as soon as all of
/// its letters are assigned. With pruning off this walks all |S_n|^#gens
/// candidates filtered by the relators.
inline HomSearchResult enumerate_homs(const Presentation& p, int degree,
                                      const HomSearchOptions& opts = {}) {
    if (degree < 1) throw std::invalid_argument("enumerate_homs: degree must be >= 1");
    const std::size_t ngens = p.num_generators();
    const std::vector<Permutation> sn = all_permutations(degree);

    // relators_ready[g]: relators whose largest generator index is g.
    std::vector<std::vector<const FreeWord*>> relators_ready(ngens);
    for (const FreeWord& r : p.relators()) {
        const int mg = r.max_gen();
        if (mg >= 0)
            relators_ready[static_cast<std::size_t>(mg)].push_back(&r);
        // A vacuous relator constrains nothing.
    }

    // Candidate images per generator position.
    std::vector<Permutation> first_candidates;
    std::vector<Permutation> conjugate_pool;
    if (opts.meridional) {
        std::set<std::vector<int>> seen_types;
        for (const Permutation& g : sn)
            if (seen_types.insert(g.cycle_type()).second) first_candidates.push_back(g);
    }

    HomSearchResult res;
    std::vector<Permutation> stack;
    stack.reserve(ngens);

    const std::function<void(std::size_t)> descend = [&](std::size_t gi) {
        if (gi == ngens) {
            HomAssignment h;
            h.degree = degree;
            h.images = stack;
            h.image_order = static_cast<int>(image_subgroup(h).size());
            res.homs.push_back(std::move(h));
            return;
        }
        const std::vector<Permutation>* pool = &sn;
        if (opts.meridional) pool = (gi == 0) ? &first_candidates : &conjugate_pool;
        for (const Permutation& cand : *pool) {
            ++res.nodes;
            budget_tick(opts.budget);
            stack.push_back(cand);
            bool ok = true;
            for (const FreeWord* r : relators_ready[gi])
                if (!evaluate_word(*r, stack, degree).is_identity()) {
                    ok = false;
                    break;
                }
            if (ok) {
                if (opts.meridional && gi == 0) {
                    conjugate_pool.clear();
                    const auto type = cand.cycle_type();
                    for (const Permutation& g : sn)
                        if (g.cycle_type() == type) conjugate_pool.push_back(g);
                }
                descend(gi + 1);
            }
            stack.pop_back();
        }
    };

    if (ngens == 0) {
        // The trivial group has exactly the empty homomorphism.
        res.homs.push_back(HomAssignment{degree, {}, 1});
        return res;
    }

    try {
        descend(0);
    } catch (const BudgetExhausted&) {
        res.budget_exhausted = true;
    }
    return res;
}

namespace detail {

/// Lexicographically smallest simultaneous conjugate of the image tuple.
inline std::vector<Permutation> canonical_conjugate(const std::vector<Permutation>& images,
                                                    int degree) {
    std::vector<Permutation> best;
    for (const Permutation& c : all_permutations(degree)) {
        std::vector<Permutation> cur;
        cur.reserve(images.size());
        for (const Permutation& g : images) cur.push_back(g.conjugated_by(c));
        if (best.empty() || cur < best) best = std::move(cur);
    }
    return best;
}

}  // namespace detail

/// One representative per orbit under simultaneous conjugation in S_n.
/// The representative is the lexicographically minimal conjugate, and the
/// output is sorted, so the result is independent of input order.
inline std::vector<HomAssignment> dedupe(const std::vector<HomAssignment>& hs) {
    std::set<std::vector<Permutation>> canon;
    std::vector<HomAssignment> out;
    for (const HomAssignment& h : hs) {
        auto c = detail::canonical_conjugate(h.images, h.degree);
        if (canon.insert(c).second) {
            HomAssignment rep;
            rep.degree = h.degree;
            rep.images = std::move(c);
            rep.image_order = h.image_order;  // conjugation preserves the order
            out.push_back(std::move(rep));
        }
    }
    std::sort(out.begin(), out.end(), [](const HomAssignment& a, const HomAssignment& b) {
        return a.images < b.images;
    });
    return out;
}

}  // namespace tap

#endif  // TAP_HOMS_HPP
