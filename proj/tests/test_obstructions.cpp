#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tap/catalog.hpp"
#include "tap/obstructions.hpp"

using tap::CertReason;
using tap::FiberStatus;
using tap::LaurentPoly;
using tap::Presentation;
using tap::RibbonVerdict;
using oracle::make_poly;

namespace {

Presentation catalog(const std::string& name) {
    return tap::catalog_presentation(*tap::find_catalog(name));
}

}  // namespace

TEST_CASE("fiber-check certificates", "[obstructions]") {
    SECTION("5_2 is certified nonfibered by its classical polynomial") {
        const auto v = tap::fiber_check(catalog("5_2"), {.max_degree = 1});
        REQUIRE(v.status == FiberStatus::NonfiberedCertified);
        REQUIRE(v.certificate.has_value());
        CHECK(v.certificate->degree == 1);
        CHECK(v.certificate->reason == CertReason::Delta1NonMonic);
        REQUIRE(v.certificate->report.delta1_z.has_value());
        CHECK(*v.certificate->report.delta1_z == make_poly({{2, 2}, {1, -3}, {0, 2}}));
    }

    SECTION("6_1 is certified nonfibered by its classical polynomial") {
        const auto v = tap::fiber_check(catalog("6_1"), {.max_degree = 1});
        REQUIRE(v.status == FiberStatus::NonfiberedCertified);
        REQUIRE(v.certificate.has_value());
        CHECK(v.certificate->reason == CertReason::Delta1NonMonic);
        REQUIRE(v.certificate->report.delta1_z.has_value());
        CHECK(*v.certificate->report.delta1_z == make_poly({{2, 2}, {1, -5}, {0, 2}}));
    }

    SECTION("the fibered trefoil never produces a certificate") {
        const auto v = tap::fiber_check(catalog("3_1"), {.max_degree = 3});
        CHECK(v.status == FiberStatus::NoObstructionFound);
        CHECK_FALSE(v.certificate.has_value());
        for (const auto& log : v.tested)
            for (const auto& rep : log.reports) {
                CHECK_FALSE(rep.delta1_zero());
                CHECK(rep.monic == true);
            }
    }

    SECTION("the solid-torus presentation gets a note, never a certificate") {
        const Presentation unknot({"x"}, {}, {1});
        const auto v = tap::fiber_check(unknot, {.max_degree = 2});
        CHECK(v.status == FiberStatus::NoObstructionFound);
        CHECK_FALSE(v.certificate.has_value());
        REQUIRE_FALSE(v.notes.empty());
        CHECK(v.notes[0].find("solid torus") != std::string::npos);
        for (const auto& log : v.tested)
            for (const auto& rep : log.reports) CHECK(rep.delta1 == LaurentPoly::one());
    }

    SECTION("raising the search depth never retracts a certificate") {
        const auto v1 = tap::fiber_check(catalog("5_2"), {.max_degree = 1});
        const auto v2 = tap::fiber_check(catalog("5_2"), {.max_degree = 2});
        REQUIRE(v1.status == FiberStatus::NonfiberedCertified);
        REQUIRE(v2.status == FiberStatus::NonfiberedCertified);
        CHECK(v1.certificate->degree == v2.certificate->degree);
        CHECK(v1.certificate->reason == v2.certificate->reason);
        CHECK(v1.certificate->report.delta1 == v2.certificate->report.delta1);
    }

    SECTION("a starved budget reports exhaustion, never success") {
        tap::FiberCheckOptions opts;
        opts.max_degree = 4;
        opts.max_steps = 50;
        const auto v = tap::fiber_check(catalog("3_1"), opts);
        CHECK(v.status == FiberStatus::BudgetExhausted);
        CHECK_FALSE(v.certificate.has_value());
    }

    SECTION("invalid input propagates") {
        const Presentation bad({"x", "y"}, {}, {0, 0});
        CHECK_THROWS_AS(tap::fiber_check(bad), std::invalid_argument);
    }
}

TEST_CASE("parallel fiber-check is deterministic", "[obstructions]") {
    tap::FiberCheckOptions serial{.max_degree = 3, .jobs = 1};
    tap::FiberCheckOptions parallel{.max_degree = 3, .jobs = 4};
    const auto a = tap::fiber_check(catalog("4_1"), serial);
    const auto b = tap::fiber_check(catalog("4_1"), parallel);
    REQUIRE(a.status == b.status);
    REQUIRE(a.tested.size() == b.tested.size());
    for (std::size_t i = 0; i < a.tested.size(); ++i) {
        CHECK(a.tested[i].hom_count == b.tested[i].hom_count);
        REQUIRE(a.tested[i].reports.size() == b.tested[i].reports.size());
        for (std::size_t k = 0; k < a.tested[i].reports.size(); ++k)
            CHECK(a.tested[i].reports[k].delta1 == b.tested[i].reports[k].delta1);
    }
}

TEST_CASE("ribbon screen", "[obstructions]") {
    SECTION("unknot below trefoil is consistent") {
        const auto r = tap::ribbon_screen(catalog("unknot"), catalog("3_1"));
        CHECK(r.verdict == RibbonVerdict::Consistent);
        CHECK(r.divisibility.holds);
    }

    SECTION("trefoil divides trefoil # 4_1 # 4_1") {
        const auto tref = catalog("3_1");
        const auto fig8 = catalog("4_1");
        const auto sum1 = tap::connected_sum(tref, "x1", fig8, "x1");
        const auto sum2 = tap::connected_sum(sum1, "x1", fig8, "x1");
        const auto r = tap::ribbon_screen(tref, sum2);
        CHECK(r.verdict == RibbonVerdict::Consistent);
        CHECK(r.divisibility.holds);
        // the engine's product really is (t^2-t+1)(t^2-3t+1)^2
        const auto expected = (make_poly({{2, 1}, {1, -1}, {0, 1}}) *
                               make_poly({{2, 1}, {1, -3}, {0, 1}}) *
                               make_poly({{2, 1}, {1, -3}, {0, 1}}))
                                  .canonical();
        CHECK(r.divisibility.upper == expected);
    }

    SECTION("figure-eight does not divide the trefoil") {
        const auto r = tap::ribbon_screen(catalog("4_1"), catalog("3_1"));
        CHECK(r.verdict == RibbonVerdict::Obstructed);
        CHECK_FALSE(r.divisibility.holds);
    }

    SECTION("fibered transfer fires for 5_2 below a fibered upper knot") {
        tap::RibbonOptions opts;
        opts.upper_fibered = true;
        const auto r = tap::ribbon_screen(catalog("5_2"), catalog("3_1"), opts);
        CHECK(r.verdict == RibbonVerdict::Obstructed);
        REQUIRE(r.fibered_transfer.has_value());
        CHECK(r.fibered_transfer->reason == CertReason::Delta1NonMonic);
    }

    SECTION("reflexivity: every catalog entry is consistent with itself") {
        for (const auto& e : tap::catalog_entries()) {
            const auto p = tap::catalog_presentation(e);
            const auto r = tap::ribbon_screen(p, p);
            CHECK(r.verdict == RibbonVerdict::Consistent);
            CHECK(r.divisibility.holds);
        }
    }

    SECTION("A is consistent below A # B # mirror(B)") {
        const auto a = catalog("3_1");
        const auto b_entry = *tap::find_catalog("5_2");
        const auto b = tap::braid_to_presentation(b_entry.braid);
        const auto b_mirror = tap::braid_to_presentation(tap::mirror(b_entry.braid));
        const auto sum = tap::connected_sum(tap::connected_sum(a, "x1", b, "x1"), "x1",
                                            b_mirror, "x1");
        const auto r = tap::ribbon_screen(a, sum);
        CHECK(r.divisibility.holds);
        CHECK(r.verdict == RibbonVerdict::Consistent);
    }

    SECTION("phi mismatch is rejected") {
        Presentation base({"u", "v"}, {}, {2, 1});
        const Presentation nonmeridional({"u", "v"}, {base.parse_word("u v' v'")}, {2, 1});
        REQUIRE(nonmeridional.validate().ok);
        CHECK_THROWS_AS(tap::ribbon_screen(nonmeridional, catalog("3_1")),
                        std::invalid_argument);
    }

    SECTION("conditional pairs are reported but never drive the verdict") {
        // A deliberately mismatched pair: Z/2 regular on both sides.
        const auto lower = catalog("unknot");
        const auto upper = catalog("3_1");
        const auto swap2 = tap::Permutation({1, 0});
        tap::RibbonOptions opts;
        {
            tap::HomAssignment hl{2, std::vector<tap::Permutation>(lower.num_generators(), swap2),
                                  2};
            tap::HomAssignment hu{2, std::vector<tap::Permutation>(upper.num_generators(), swap2),
                                  2};
            opts.rep_pairs.emplace_back(
                tap::Representation::regular(tap::image_subgroup(hl), hl),
                tap::Representation::regular(tap::image_subgroup(hu), hu));
        }
        const auto r = tap::ribbon_screen(lower, upper, opts);
        REQUIRE(r.conditional.size() == 1);
        CHECK(r.conditional[0].label.find("conditional") != std::string::npos);
        CHECK(r.verdict == RibbonVerdict::Consistent);
    }
}

TEST_CASE("degree and genus bounds", "[obstructions]") {
    const auto report = [](const std::string& name) {
        const auto p = catalog(name);
        return tap::compute_report(p, tap::Representation::trivial(p.num_generators()));
    };

    const auto tref = tap::genus_degree_report(report("3_1"), 1);
    REQUIRE(tref.has_value());
    CHECK(tref->degree == 2);
    CHECK(tref->genus_lower_bound == 1);

    const auto unknot = tap::genus_degree_report(report("unknot"), 1);
    REQUIRE(unknot.has_value());
    CHECK(unknot->genus_lower_bound == 0);

    const auto cinq = tap::genus_degree_report(report("5_1"), 1);
    REQUIRE(cinq.has_value());
    CHECK(cinq->degree == 4);
    CHECK(cinq->genus_lower_bound == 2);

    // vanishing first order: unavailable
    const auto unlink = tap::braid_to_presentation(tap::BraidWord(2, {}));
    const auto rep = tap::compute_report(unlink, tap::Representation::trivial(2));
    CHECK_FALSE(tap::genus_degree_report(rep, 1).has_value());
}
