#ifndef TAP_OBSTRUCTIONS_HPP
#define TAP_OBSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tap/budget.hpp"
#include "tap/homs.hpp"
#include "tap/parallel.hpp"
#include "tap/presentation.hpp"
#include "tap/representation.hpp"
#include "tap/twisted.hpp"

namespace tap {

enum class FiberStatus { NonfiberedCertified, NoObstructionFound, BudgetExhausted };

inline const char* to_string(FiberStatus s) {
    switch (s) {
        case FiberStatus::NonfiberedCertified: return "NONFIBERED_CERTIFIED";
        case FiberStatus::NoObstructionFound: return "NO_OBSTRUCTION_FOUND";
        case FiberStatus::BudgetExhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

enum class CertReason { Delta1Zero, Delta1NonMonic };

inline const char* to_string(CertReason r) {
    return r == CertReason::Delta1Zero ? "delta1-zero" : "delta1-nonmonic";
}

struct FiberCertificate {
    int degree = 1;  // symmetric group degree the witness came from
    HomAssignment hom;
    CertReason reason = CertReason::Delta1NonMonic;
    TwistedPolyReport report;
};

struct DegreeLog {
    int degree = 1;
    std::size_t hom_count = 0;         // after conjugacy dedup
    std::size_t skipped_dim_cap = 0;   // homs whose regular dimension exceeded the cap
    std::vector<TwistedPolyReport> reports;
    bool complete = true;              // false when the budget interrupted this degree
};

struct FiberVerdict {
    FiberStatus status = FiberStatus::NoObstructionFound;
    std::optional<FiberCertificate> certificate;
    std::vector<DegreeLog> tested;
    std::vector<std::string> notes;
};

struct FiberCheckOptions {
    int max_degree = 5;        // search S_1 .. S_max_degree
    std::size_t dim_cap = 120; // skip regular representations above this dimension
    std::uint64_t max_steps = 500'000'000;
    std::optional<double> budget_secs;  // wall-clock safety net
    unsigned jobs = 1;
    bool store_reports = true;
};

namespace detail {

/// Certificate test on a finished report. The non-monic branch only fires on
/// a clean integral normalization: a content anomaly must never certify.
inline std::optional<CertReason> certificate_reason(const TwistedPolyReport& rep) {
    if (rep.delta1_zero()) return CertReason::Delta1Zero;
    if (rep.monic.has_value() && !*rep.monic) return CertReason::Delta1NonMonic;
    return std::nullopt;
}

/// Replays a certificate from scratch before it is emitted: fresh assembly,
/// independent relator check, the Q-module route, and the determinant route
/// (or a rank count when no pivot exists) must all agree on the claim.
inline void verify_certificate(const Presentation& p, const HomAssignment& hom,
                               CertReason reason) {
    if (!satisfies_relators(p, hom.images, hom.degree))
        throw std::logic_error("certificate verification: relators violated");
    const Representation rep =
        hom.image_order == 1 && hom.degree == 1
            ? Representation::trivial(p.num_generators())
            : Representation::regular(image_subgroup(hom), hom);
    const TwistedComplex tc = assemble(p, rep);
    const Delta1Q d1 = delta1_q(tc);

    if (reason == CertReason::Delta1Zero) {
        if (d1.free_rank == 0)
            throw std::logic_error("certificate verification: delta1 is nonzero");
        if (tc.deficiency_one() && tc.pivot) {
            // order relation: delta1 = 0 forces det(A_pivot) = 0
            const WadaPair w = wada_at(tc, *tc.pivot);
            if (!w.num.is_zero())
                throw std::logic_error("certificate verification: Wada determinant is nonzero");
        } else {
            const std::size_t n = tc.d1.rows();
            if (rank_q(tc.d2) + rank_q(tc.d1) >= n)
                throw std::logic_error("certificate verification: rank count disagrees");
        }
        return;
    }

    // non-monic branch
    if (d1.free_rank != 0)
        throw std::logic_error("certificate verification: delta1 vanishes, wrong reason");
    const auto w = wada(tc);
    const auto z = delta1_z(tc, delta0(tc), w);
    if (!z || z->content_ratio != 1)
        throw std::logic_error("certificate verification: integral normalization unavailable");
    if (is_monic(z->value))
        throw std::logic_error("certificate verification: delta1 is monic after all");
    if (z->value.monic_canonical() != d1.value.monic_canonical())
        throw std::logic_error("certificate verification: determinant and module routes differ");
}

}  // namespace detail

/// Searches finite quotients for a fibering obstruction: a vanishing twisted
/// first order, or a non-monic integral normalization. Returns the first
/// certificate in a deterministic scan order; otherwise reports that nothing
/// was found within the examined quotients. The search can say "this class is
/// not fibered" but never "this class is fibered": a clean sweep only means
/// no certificate exists within the budgeted quotients.
inline FiberVerdict fiber_check(const Presentation& p, const FiberCheckOptions& opts = {}) {
    p.require_valid();
    FiberVerdict verdict;

    // The solid torus is excluded from the monicness theorem; the standard
    // presentation of its group gets a note instead of any certificate.
    if (p.num_generators() == 1 && p.num_relators() == 0) {
        verdict.notes.push_back(
            "unknot exterior (solid torus): fibering obstructions do not apply");
    }

    const Budget budget(opts.max_steps, opts.budget_secs);
    const bool meridional_ok = p.num_components() == 1;
    bool exhausted = false;

    for (int degree = 1; degree <= opts.max_degree && !exhausted; ++degree) {
        DegreeLog log;
        log.degree = degree;
        std::vector<HomAssignment> homs;
        try {
            HomSearchOptions hopts;
            hopts.meridional = meridional_ok;
            hopts.budget = &budget;
            const HomSearchResult found = enumerate_homs(p, degree, hopts);
            if (found.budget_exhausted) {
                log.complete = false;
                exhausted = true;
            }
            homs = dedupe(found.homs);
        } catch (const BudgetExhausted&) {
            log.complete = false;
            exhausted = true;
        }
        log.hom_count = homs.size();

        std::vector<std::optional<TwistedPolyReport>> slots(homs.size());
        std::vector<char> skipped(homs.size(), 0);
        if (!exhausted) {
            try {
                parallel_for(homs.size(), opts.jobs, [&](std::size_t i) {
                    const HomAssignment& h = homs[i];
                    const FiniteGroupTable g = image_subgroup(h);
                    if (g.size() > opts.dim_cap) {
                        skipped[i] = 1;
                        return;
                    }
                    const Representation rep = degree == 1
                                                   ? Representation::trivial(p.num_generators())
                                                   : Representation::regular(g, h);
                    slots[i] = compute_report(p, rep, &budget);
                });
            } catch (const BudgetExhausted&) {
                log.complete = false;
                exhausted = true;
            }
        }

        // Deterministic scan of whatever finished, in canonical hom order.
        for (std::size_t i = 0; i < homs.size(); ++i) {
            if (skipped[i]) {
                ++log.skipped_dim_cap;
                continue;
            }
            if (!slots[i]) continue;
            const TwistedPolyReport& rep = *slots[i];
            for (const std::string& n : rep.notes)
                if (n.find("content ratio") != std::string::npos)
                    verdict.notes.push_back("degree " + std::to_string(degree) + ": " + n);
            if (!verdict.certificate) {
                if (const auto reason = detail::certificate_reason(rep)) {
                    detail::verify_certificate(p, homs[i], *reason);
                    verdict.certificate = FiberCertificate{degree, homs[i], *reason, rep};
                }
            }
            if (opts.store_reports) log.reports.push_back(rep);
        }
        if (log.skipped_dim_cap > 0)
            verdict.notes.push_back("degree " + std::to_string(degree) + ": skipped " +
                                    std::to_string(log.skipped_dim_cap) +
                                    " quotient(s) above the dimension cap");
        verdict.tested.push_back(std::move(log));
        if (verdict.certificate) break;
    }

    if (verdict.certificate)
        verdict.status = FiberStatus::NonfiberedCertified;
    else if (exhausted)
        verdict.status = FiberStatus::BudgetExhausted;
    else
        verdict.status = FiberStatus::NoObstructionFound;
    return verdict;
}

enum class RibbonVerdict { Obstructed, Consistent };

inline const char* to_string(RibbonVerdict v) {
    return v == RibbonVerdict::Obstructed ? "OBSTRUCTED" : "CONSISTENT";
}

struct DivisibilityCheck {
    bool holds = true;
    LaurentPoly lower, upper;  // the compared order polynomials (canonical)
    std::vector<std::string> notes;
};

struct DegreeComparison {
    bool available = false;
    int lower_degree = 0, upper_degree = 0;
    bool nondecreasing = true;
    std::string caveat;
};

struct ConditionalResult {
    std::string label;
    DivisibilityCheck divisibility;
};

struct RibbonReport {
    std::string lower_name = "K0", upper_name = "K1";
    RibbonVerdict verdict = RibbonVerdict::Consistent;
    DivisibilityCheck divisibility;          // trivial representation; drives the verdict
    DegreeComparison degrees;                // informational only
    std::optional<FiberCertificate> fibered_transfer;  // lower-side nonfibered certificate
    bool upper_fibered_flag = false;
    std::vector<ConditionalResult> conditional;  // user-supplied pairs, never drive the verdict
    std::vector<std::string> notes;
};

struct RibbonOptions {
    std::optional<bool> upper_fibered;  // catalog flag or user assertion
    int transfer_max_degree = 1;        // quotient depth for the transfer check
    unsigned jobs = 1;
    std::string lower_name = "K0", upper_name = "K1";
    /// User-supplied matched representation pairs (lower, upper). Their
    /// divisibility results are reported as conditional: they assume the pair
    /// is induced from a common cobordism representation, which the engine
    /// cannot check.
    std::vector<std::pair<Representation, Representation>> rep_pairs;
};

namespace detail {

inline LaurentPoly order_witness(const TwistedPolyReport& rep, std::vector<std::string>& notes,
                                 const std::string& who) {
    if (rep.delta1_z && rep.content_ratio == 1) return rep.delta1_z->canonical();
    if (!rep.delta1.is_zero())
        notes.push_back(who + ": integral normalization unavailable, using the primitive lift");
    return rep.delta1.canonical();
}

}  // namespace detail

/// Divisibility screen for the ribbon-concordance direction "upper >= lower":
/// the lower order polynomial must divide the upper one for representations
/// that extend over the cobordism. Only the trivial representation (which
/// always extends) drives the verdict; the optional fibered-transfer branch
/// fires when the upper knot is declared fibered and the engine certifies the
/// lower one nonfibered.
inline RibbonReport ribbon_screen(const Presentation& lower, const Presentation& upper,
                                  const RibbonOptions& opts = {}) {
    lower.require_valid();
    upper.require_valid();
    if (!lower.is_meridional() || !upper.is_meridional())
        throw std::invalid_argument(
            "ribbon_screen: phi mismatch (both classes must send every meridional generator "
            "to 1)");

    RibbonReport out;
    out.lower_name = opts.lower_name;
    out.upper_name = opts.upper_name;
    out.notes.push_back("direction: does anything obstruct " + opts.upper_name +
                        " >= " + opts.lower_name + "?");

    const TwistedPolyReport rl =
        compute_report(lower, Representation::trivial(lower.num_generators()));
    const TwistedPolyReport ru =
        compute_report(upper, Representation::trivial(upper.num_generators()));

    out.divisibility.lower = detail::order_witness(rl, out.divisibility.notes, opts.lower_name);
    out.divisibility.upper = detail::order_witness(ru, out.divisibility.notes, opts.upper_name);
    out.divisibility.holds = divides(out.divisibility.lower, out.divisibility.upper);

    if (!rl.delta1.is_zero() && !ru.delta1.is_zero()) {
        out.degrees.available = true;
        out.degrees.lower_degree = rl.degree;
        out.degrees.upper_degree = ru.degree;
        out.degrees.nondecreasing = rl.degree <= ru.degree;
    }
    out.degrees.caveat =
        "informational only: divisibility bounds degrees only when the upper polynomial is "
        "nonzero, which twisted coefficients do not guarantee";

    if (opts.upper_fibered.has_value()) out.upper_fibered_flag = *opts.upper_fibered;
    if (opts.upper_fibered.value_or(false)) {
        FiberCheckOptions fopts;
        fopts.max_degree = opts.transfer_max_degree;
        fopts.jobs = opts.jobs;
        fopts.store_reports = false;
        const FiberVerdict fv = fiber_check(lower, fopts);
        if (fv.status == FiberStatus::NonfiberedCertified) {
            out.fibered_transfer = fv.certificate;
            out.notes.push_back("fibered transfer: " + opts.upper_name +
                                " is declared fibered but " + opts.lower_name +
                                " is certified nonfibered; a ribbon concordance would force " +
                                opts.lower_name + " to fiber");
        }
    }

    for (std::size_t i = 0; i < opts.rep_pairs.size(); ++i) {
        const auto& [rep_lower, rep_upper] = opts.rep_pairs[i];
        ConditionalResult cond;
        cond.label = "conditional pair " + std::to_string(i + 1) +
                     ": assumes the pair is induced from the cobordism";
        const TwistedPolyReport cl = compute_report(lower, rep_lower);
        const TwistedPolyReport cu = compute_report(upper, rep_upper);
        cond.divisibility.lower = detail::order_witness(cl, cond.divisibility.notes, "lower");
        cond.divisibility.upper = detail::order_witness(cu, cond.divisibility.notes, "upper");
        cond.divisibility.holds = divides(cond.divisibility.lower, cond.divisibility.upper);
        out.conditional.push_back(std::move(cond));
    }

    out.verdict = (!out.divisibility.holds || out.fibered_transfer)
                      ? RibbonVerdict::Obstructed
                      : RibbonVerdict::Consistent;
    return out;
}

struct GenusDegreeInfo {
    int degree = 0;
    std::optional<int> genus_lower_bound;  // classical knot case only (k = 1)
    std::string label = "informational";
};

/// Degree span of the first order polynomial, with the classical genus bound
/// deg/2 when the coefficients are untwisted. Unavailable when delta1 = 0.
inline std::optional<GenusDegreeInfo> genus_degree_report(const TwistedPolyReport& rep,
                                                          std::size_t k) {
    if (rep.delta1.is_zero()) return std::nullopt;
    GenusDegreeInfo info;
    info.degree = rep.degree;
    if (k == 1) info.genus_lower_bound = rep.degree / 2;
    return info;
}

}  // namespace tap

#endif  // TAP_OBSTRUCTIONS_HPP
