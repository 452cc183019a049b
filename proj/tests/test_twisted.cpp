#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tap/braid.hpp"
#include "tap/homs.hpp"
#include "tap/twisted.hpp"

using tap::BraidWord;
using tap::FreeWord;
using tap::LaurentPoly;
using tap::Presentation;
using tap::Representation;
using oracle::make_poly;

namespace {

Presentation unknot_presentation() { return Presentation({"x"}, {}, {1}); }

Presentation trefoil() { return tap::braid_to_presentation(BraidWord(2, {1, 1, 1})); }
Presentation figure_eight() { return tap::braid_to_presentation(BraidWord(3, {1, -2, 1, -2})); }

LaurentPoly seifert_poly(const std::vector<std::vector<long>>& v) {
    return oracle::to_poly(oracle::seifert_alexander(v)).canonical();
}

tap::TwistedPolyReport classical(const Presentation& p) {
    return tap::compute_report(p, Representation::trivial(p.num_generators()));
}

}  // namespace

TEST_CASE("tensor representation", "[twisted]") {
    SECTION("trivial representation sends x to [t]") {
        const Presentation p = unknot_presentation();
        const auto m = tap::tensor_rep(Representation::trivial(1), p, FreeWord::generator(0));
        REQUIRE(m.rows() == 1);
        CHECK(m.at(0, 0) == LaurentPoly::t());
    }

    SECTION("identity word maps to the identity matrix") {
        const Presentation p = trefoil();
        const auto rep = Representation::trivial(2);
        CHECK(tap::tensor_rep(rep, p, FreeWord()) == tap::PolyMatrix::identity(1));
    }

    SECTION("regular Z/2 representation of x^2") {
        // alpha(x) = [[0,1],[1,0]], phi(x) = 1: Phi(x^2) = t^2 I
        const Presentation p = unknot_presentation();
        tap::HomAssignment h{2, {tap::Permutation({1, 0})}, 2};
        const auto rep = Representation::regular(tap::image_subgroup(h), h);
        const auto m =
            tap::tensor_rep(rep, p, FreeWord::generator(0) * FreeWord::generator(0));
        CHECK(m.at(0, 0) == LaurentPoly::t(2));
        CHECK(m.at(1, 1) == LaurentPoly::t(2));
        CHECK(m.at(0, 1).is_zero());
        CHECK(m.at(1, 0).is_zero());
    }

    SECTION("Phi(w^-1) = Phi(w)^-1") {
        const Presentation p = trefoil();
        tap::HomAssignment h{3, {tap::Permutation({1, 0, 2}), tap::Permutation({0, 2, 1})}, 6};
        const auto rep = Representation::regular(tap::image_subgroup(h), h);
        const FreeWord w = p.parse_word("x1 x2 X1");
        const auto prod = tap::tensor_rep(rep, p, w) * tap::tensor_rep(rep, p, w.inverse());
        CHECK(prod == tap::PolyMatrix::identity(6));
    }
}

TEST_CASE("complex assembly", "[twisted]") {
    SECTION("unknot") {
        const auto tc = tap::assemble(unknot_presentation(), Representation::trivial(1));
        CHECK(tc.d2.rows() == 0);
        REQUIRE(tc.d1.rows() == 1);
        CHECK(tc.d1.at(0, 0) == LaurentPoly::t() - LaurentPoly::one());
        REQUIRE(tc.pivot.has_value());
        CHECK(*tc.pivot == 0);
    }

    SECTION("trefoil boundary blocks and chain condition") {
        // direct presentation <x,y | xyx y^-1 x^-1 y^-1>
        Presentation base({"x", "y"}, {}, {1, 1});
        const Presentation p({"x", "y"}, {base.parse_word("x y x Y X Y")}, {1, 1});
        const auto tc = tap::assemble(p, Representation::trivial(2));
        REQUIRE(tc.d2.rows() == 1);
        // Phi(dr/dx) = 1 + t^2 - t
        CHECK(tc.d2.at(0, 0) == make_poly({{2, 1}, {1, -1}, {0, 1}}));
        CHECK((tc.d2 * tc.d1).is_zero());
    }

    SECTION("classical setup: d1 blocks are t^phi - 1") {
        const Presentation p = figure_eight();
        const auto tc = tap::assemble(p, Representation::trivial(3));
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(tc.d1.at(j, 0) == LaurentPoly::t() - LaurentPoly::one());
    }

    SECTION("chain condition for a twisted representation") {
        const Presentation p = trefoil();
        for (const auto& h : tap::dedupe(tap::enumerate_homs(p, 3).homs)) {
            const auto rep = Representation::regular(tap::image_subgroup(h), h);
            const auto tc = tap::assemble(p, rep);
            CHECK((tc.d2 * tc.d1).is_zero());
        }
    }

    SECTION("inconsistent representation is rejected") {
        const Presentation p = trefoil();
        // x -> (0 1), y -> identity violates the braid relator
        std::vector<tap::IntMat> mats{
            tap::IntMat::permutation_matrix(tap::Permutation({1, 0})),
            tap::IntMat::identity(2)};
        const auto bad = Representation::user(std::move(mats));
        CHECK_THROWS_AS(tap::assemble(p, bad), std::invalid_argument);
    }
}

TEST_CASE("delta0", "[twisted]") {
    SECTION("unknot and trefoil, trivial coefficients") {
        const auto t_minus_1 = make_poly({{1, 1}, {0, -1}});
        CHECK(classical(unknot_presentation()).delta0 == t_minus_1);
        CHECK(classical(trefoil()).delta0 == t_minus_1);
    }

    SECTION("regular S_3 coefficients: cross-check against the minor gcd") {
        const Presentation p = trefoil();
        tap::HomAssignment h{3, {tap::Permutation({1, 0, 2}), tap::Permutation({0, 2, 1})}, 6};
        const auto rep = Representation::regular(tap::image_subgroup(h), h);
        const auto tc = tap::assemble(p, rep);
        const LaurentPoly d0 = tap::delta0(tc);
        CHECK(d0 == tap::minors_gcd(tc.d1, tc.k).canonical());
        CHECK(tap::divides(d0, tc.gen_dets[0].canonical()));
    }
}

TEST_CASE("delta1 over Q", "[twisted]") {
    SECTION("unknot: H_1 vanishes") {
        const auto r = classical(unknot_presentation());
        CHECK(r.delta1 == LaurentPoly::one());
        CHECK(r.free_rank == 0);
    }

    SECTION("catalog knots against the Seifert-matrix oracle") {
        CHECK(classical(trefoil()).delta1 == seifert_poly({{-1, 1}, {0, -1}}));
        CHECK(classical(trefoil()).delta1 == make_poly({{2, 1}, {1, -1}, {0, 1}}));
        CHECK(classical(figure_eight()).delta1 == seifert_poly({{1, 1}, {0, -1}}));
        CHECK(classical(figure_eight()).delta1 == make_poly({{2, 1}, {1, -3}, {0, 1}}));
    }

    SECTION("two-component unlink: positive free rank, zero polynomial") {
        const auto p = tap::braid_to_presentation(BraidWord(2, {}));
        const auto r = classical(p);
        CHECK(r.delta1.is_zero());
        CHECK(r.free_rank == 1);
        CHECK(r.monic == false);
    }
}

TEST_CASE("wada determinants", "[twisted]") {
    SECTION("unknot: empty determinant over t - 1") {
        const auto tc = tap::assemble(unknot_presentation(), Representation::trivial(1));
        const auto w = tap::wada(tc);
        REQUIRE(w.has_value());
        CHECK(w->num == LaurentPoly::one());
        CHECK(w->den == make_poly({{1, 1}, {0, -1}}));
    }

    SECTION("trefoil: both pivots, column symmetry") {
        Presentation base({"x", "y"}, {}, {1, 1});
        const Presentation p({"x", "y"}, {base.parse_word("x y x Y X Y")}, {1, 1});
        const auto tc = tap::assemble(p, Representation::trivial(2));
        const auto w0 = tap::wada_at(tc, 0);
        const auto w1 = tap::wada_at(tc, 1);
        // pivot y strikes column y: left with Phi(dr/dx) = 1 - t + t^2
        CHECK(w1.num.canonical() == make_poly({{2, 1}, {1, -1}, {0, 1}}));
        CHECK(w1.den.canonical() == make_poly({{1, 1}, {0, -1}}));
        // det(A_j) det(Phi(x_i)-I) = det(A_i) det(Phi(x_j)-I) up to units
        CHECK((w0.num * w1.den).canonical() == (w1.num * w0.den).canonical());
    }

    SECTION("non-deficiency-1 input is refused") {
        const auto p = tap::braid_to_presentation(BraidWord(2, {}));  // unlink, deficiency 2
        const auto tc = tap::assemble(p, Representation::trivial(2));
        CHECK_THROWS_AS(tap::wada(tc), std::invalid_argument);
    }
}

TEST_CASE("integral normalization", "[twisted]") {
    SECTION("trefoil and unknot") {
        const auto rt = classical(trefoil());
        REQUIRE(rt.delta1_z.has_value());
        CHECK(*rt.delta1_z == make_poly({{2, 1}, {1, -1}, {0, 1}}));
        CHECK(rt.content_ratio == 1);
        CHECK(rt.monic == true);

        const auto ru = classical(unknot_presentation());
        REQUIRE(ru.delta1_z.has_value());
        CHECK(*ru.delta1_z == LaurentPoly::one());
        CHECK(ru.monic == true);
    }

    SECTION("order relation for trefoil with trivial and S_3 coefficients") {
        const Presentation p = trefoil();
        std::vector<Representation> reps{Representation::trivial(2)};
        for (const auto& h : tap::dedupe(tap::enumerate_homs(p, 3).homs))
            reps.push_back(Representation::regular(tap::image_subgroup(h), h));
        for (const auto& rep : reps) {
            const auto tc = tap::assemble(p, rep);
            const auto w = tap::wada(tc);
            REQUIRE(w.has_value());
            const LaurentPoly d0 = tap::delta0(tc);
            const auto d1 = tap::delta1_q(tc);
            REQUIRE(d1.free_rank == 0);
            CHECK((w->num * d0).monic_canonical() == (d1.value * w->den).monic_canonical());
        }
    }
}

TEST_CASE("delta1 invariances", "[twisted]") {
    SECTION("conjugate assignments give the same canonical polynomial") {
        const Presentation p = trefoil();
        const tap::HomAssignment h{3, {tap::Permutation({1, 0, 2}), tap::Permutation({0, 2, 1})},
                                   6};
        const auto conj = tap::Permutation({2, 0, 1});
        tap::HomAssignment hc{3,
                              {h.images[0].conjugated_by(conj), h.images[1].conjugated_by(conj)},
                              6};
        REQUIRE(tap::satisfies_relators(p, hc.images, 3));
        const auto r1 = tap::compute_report(p, Representation::regular(tap::image_subgroup(h), h));
        const auto r2 =
            tap::compute_report(p, Representation::regular(tap::image_subgroup(hc), hc));
        CHECK(r1.delta1 == r2.delta1);
        CHECK(r1.delta0 == r2.delta0);
    }

    SECTION("independent of which redundant braid relator is dropped") {
        const BraidWord b(3, {1, -2, 1, -2});
        for (int dropped = 0; dropped < 3; ++dropped) {
            const auto p = tap::braid_to_presentation(b, dropped);
            CHECK(classical(p).delta1 == make_poly({{2, 1}, {1, -3}, {0, 1}}));
        }
    }
}
