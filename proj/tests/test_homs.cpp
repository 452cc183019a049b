#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tap/braid.hpp"
#include "tap/homs.hpp"
#include "tap/representation.hpp"

using tap::HomAssignment;
using tap::Permutation;
using tap::Presentation;

namespace {

Presentation trefoil() { return tap::braid_to_presentation(tap::BraidWord(2, {1, 1, 1})); }

Presentation free_group(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('x' + i)));
    return Presentation(names, {}, std::vector<int>(n, 1));
}

/// Brute-force oracle: filter every image tuple by the relators directly.
std::vector<std::vector<Permutation>> brute_force_homs(const Presentation& p, int degree) {
    const auto sn = tap::all_permutations(degree);
    std::vector<std::vector<Permutation>> out;
    std::vector<std::size_t> idx(p.num_generators(), 0);
    const std::size_t total = p.num_generators();
    for (;;) {
        std::vector<Permutation> images;
        for (std::size_t g = 0; g < total; ++g) images.push_back(sn[idx[g]]);
        bool ok = true;
        for (const auto& r : p.relators())
            if (!tap::evaluate_word(r, images, degree).is_identity()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(images);
        std::size_t g = 0;
        while (g < total && ++idx[g] == sn.size()) idx[g++] = 0;
        if (g == total) break;
    }
    return out;
}

/// Brute-force conjugation orbits of image tuples.
std::size_t brute_force_orbit_count(const std::vector<std::vector<Permutation>>& homs,
                                    int degree) {
    std::set<std::vector<Permutation>> seen;
    std::size_t orbits = 0;
    for (const auto& h : homs) {
        if (seen.count(h)) continue;
        ++orbits;
        for (const auto& c : tap::all_permutations(degree)) {
            std::vector<Permutation> conj;
            for (const auto& g : h) conj.push_back(g.conjugated_by(c));
            seen.insert(conj);
        }
    }
    return orbits;
}

}  // namespace

TEST_CASE("homomorphism enumeration", "[homs]") {
    SECTION("S_1 admits exactly the trivial homomorphism") {
        const auto res = tap::enumerate_homs(trefoil(), 1);
        REQUIRE(res.homs.size() == 1);
        CHECK(res.homs[0].image_order == 1);
    }

    SECTION("free group on 2 generators into S_2") {
        CHECK(tap::enumerate_homs(free_group(2), 2).homs.size() == 4);
    }

    SECTION("trefoil into S_3 contains the braid pair and matches brute force") {
        const auto res = tap::enumerate_homs(trefoil(), 3);
        const Permutation a({1, 0, 2});  // (0 1)
        const Permutation b({0, 2, 1});  // (1 2)
        // (01)(12)(01) = (02) = (12)(01)(12)
        CHECK((a * b * a) == (b * a * b));
        bool found = false;
        for (const auto& h : res.homs)
            if (h.images == std::vector<Permutation>{a, b}) found = true;
        CHECK(found);
        CHECK(res.homs.size() == brute_force_homs(trefoil(), 3).size());
    }

    SECTION("every returned assignment satisfies the relators") {
        const auto res = tap::enumerate_homs(trefoil(), 4);
        for (const auto& h : res.homs)
            CHECK(tap::satisfies_relators(trefoil(), h.images, h.degree));
    }

    SECTION("meridional pruning is a subset, same classes up to conjugacy") {
        tap::HomSearchOptions prune;
        prune.meridional = true;
        for (int degree = 2; degree <= 3; ++degree) {
            const auto full = tap::enumerate_homs(trefoil(), degree);
            const auto restricted = tap::enumerate_homs(trefoil(), degree, prune);
            std::set<std::vector<Permutation>> full_set;
            for (const auto& h : full.homs) full_set.insert(h.images);
            for (const auto& h : restricted.homs) CHECK(full_set.count(h.images) == 1);
            CHECK(tap::dedupe(restricted.homs).size() == tap::dedupe(full.homs).size());
        }
    }

    SECTION("step budget reports exhaustion") {
        tap::Budget tiny(5, std::nullopt);
        tap::HomSearchOptions opts;
        opts.budget = &tiny;
        const auto res = tap::enumerate_homs(trefoil(), 3, opts);
        CHECK(res.budget_exhausted);
    }
}

TEST_CASE("image subgroups", "[homs]") {
    SECTION("trivial image") {
        HomAssignment h{2, {Permutation::identity(2), Permutation::identity(2)}, 1};
        CHECK(tap::image_subgroup(h).size() == 1);
    }

    SECTION("single transposition generates order 2") {
        const Permutation s({1, 0});
        HomAssignment h{2, {s, s}, 2};
        CHECK(tap::image_subgroup(h).size() == 2);
    }

    SECTION("braid pair generates all of S_3") {
        HomAssignment h{3, {Permutation({1, 0, 2}), Permutation({0, 2, 1})}, 6};
        CHECK(tap::image_subgroup(h).size() == 6);
    }
}

TEST_CASE("regular representations", "[homs]") {
    SECTION("trivial group gives 1x1 identities") {
        HomAssignment h{1, {Permutation::identity(1), Permutation::identity(1)}, 1};
        const auto g = tap::image_subgroup(h);
        const auto rep = tap::Representation::regular(g, h);
        CHECK(rep.dimension() == 1);
        CHECK(rep.matrix(0).is_identity());
    }

    SECTION("Z/2 swap matrix") {
        const Permutation s({1, 0});
        HomAssignment h{2, {s}, 2};
        const auto g = tap::image_subgroup(h);
        const auto rep = tap::Representation::regular(g, h);
        REQUIRE(rep.dimension() == 2);
        CHECK(rep.matrix(0).at(0, 0) == 0);
        CHECK(rep.matrix(0).at(0, 1) == 1);
        CHECK(rep.matrix(0).at(1, 0) == 1);
        CHECK(rep.matrix(0).at(1, 1) == 0);
    }

    SECTION("left multiplication matrices respect the Cayley table") {
        HomAssignment h{3, {Permutation({1, 0, 2}), Permutation({0, 2, 1})}, 6};
        const auto g = tap::image_subgroup(h);
        REQUIRE(g.size() == 6);
        const auto rep = tap::Representation::regular(g, h);
        for (std::size_t gen = 0; gen < 2; ++gen) {
            const auto& m = rep.matrix(gen);
            for (std::size_t j = 0; j < g.size(); ++j) {
                const int target = g.index_of(h.images[gen] * g.element(j));
                for (std::size_t i = 0; i < g.size(); ++i)
                    CHECK(m.at(i, j) == (static_cast<int>(i) == target ? 1 : 0));
            }
            // permutation matrices: inverse = transpose
            CHECK(rep.inverse(gen) == m.transpose());
            CHECK((m * rep.inverse(gen)).is_identity());
        }
        // faithful on the two distinct generator images
        CHECK(!(rep.matrix(0) == rep.matrix(1)));
    }
}

TEST_CASE("conjugacy dedup", "[homs]") {
    SECTION("singleton survives") {
        HomAssignment h{2, {Permutation({1, 0})}, 2};
        CHECK(tap::dedupe({h}).size() == 1);
    }

    SECTION("conjugate singletons collapse") {
        HomAssignment a{3, {Permutation({1, 0, 2})}, 2};  // (0 1)
        HomAssignment b{3, {Permutation({0, 2, 1})}, 2};  // (1 2)
        CHECK(tap::dedupe({a, b}).size() == 1);
    }

    SECTION("orbit counts match brute force") {
        for (int degree = 2; degree <= 4; ++degree) {
            const auto res = tap::enumerate_homs(trefoil(), degree);
            const auto brute = brute_force_homs(trefoil(), degree);
            REQUIRE(res.homs.size() == brute.size());
            CHECK(tap::dedupe(res.homs).size() == brute_force_orbit_count(brute, degree));
        }
    }
}
