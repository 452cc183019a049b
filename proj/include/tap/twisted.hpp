#ifndef TAP_TWISTED_HPP
#define TAP_TWISTED_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tap/budget.hpp"
#include "tap/laurent.hpp"
#include "tap/matrix.hpp"
#include "tap/presentation.hpp"
#include "tap/representation.hpp"
#include "tap/words.hpp"

namespace tap {

namespace detail {

inline PolyMatrix intmat_times_monomial(const IntMat& m, int exponent) {
    PolyMatrix r(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (m.at(i, j) != 0)
                r.at(i, j) = LaurentPoly::term(Rational(m.at(i, j)), exponent);
    return r;
}

}  // namespace detail

/// The tensor representation Phi(g) = alpha(g) * t^phi(g) on a word: the
/// generator matrices multiply along the word while the t-exponents add.
inline PolyMatrix tensor_rep(const Representation& alpha, const Presentation& p,
                             const FreeWord& w) {
    return detail::intmat_times_monomial(alpha.evaluate(w), static_cast<int>(p.phi_of(w)));
}

/// Z-linear extension of Phi to group-ring elements.
inline PolyMatrix tensor_rep(const Representation& alpha, const Presentation& p,
                             const GroupRingElement& e) {
    PolyMatrix acc(alpha.dimension(), alpha.dimension());
    for (const auto& [w, c] : e.terms()) {
        const IntMat m = alpha.evaluate(w);
        const int exp = static_cast<int>(p.phi_of(w));
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                if (m.at(i, j) != 0)
                    acc.at(i, j) += LaurentPoly::term(Rational(c * m.at(i, j)), exp);
    }
    return acc;
}

/// Twisted chain complex of the presentation 2-complex:
///
///   C2 = R^(m*k) --d2--> C1 = R^(n*k) --d1--> C0 = R^k,   R = Z[t^~]
///
/// with block (i,j) of d2 equal to Phi(dr_i/dx_j) and block i of d1 equal to
/// Phi(x_i) - I. Chain groups are free row-vector modules and the boundary
/// maps act by right multiplication, so d2*d1 = 0 is literally the Fox
/// fundamental identity pushed through Phi.
struct TwistedComplex {
    std::size_t k = 1;            // representation dimension
    std::size_t num_gens = 0;     // n
    std::size_t num_relators = 0; // m
    PolyMatrix d2;                // (m*k) x (n*k)
    PolyMatrix d1;                // (n*k) x k
    std::vector<LaurentPoly> gen_dets;  // det(Phi(x_j) - I) per generator
    std::optional<std::size_t> pivot;   // smallest j with gen_dets[j] != 0

    bool deficiency_one() const { return num_relators + 1 == num_gens; }
};

/// Builds the twisted complex and asserts the chain condition d2*d1 = 0.
/// A missing pivot (every det(Phi(x_j) - I) = 0) is recorded, not fatal:
/// the Wada determinant route is unavailable but SNF routes still apply.
inline TwistedComplex assemble(const Presentation& p, const Representation& alpha,
                               const Budget* budget = nullptr) {
    p.require_valid();
    alpha.require_consistent_with(p);

    const std::size_t n = p.num_generators();
    const std::size_t m = p.num_relators();
    const std::size_t k = alpha.dimension();

    TwistedComplex tc;
    tc.k = k;
    tc.num_gens = n;
    tc.num_relators = m;

    tc.d1 = PolyMatrix(n * k, k);
    const PolyMatrix id = PolyMatrix::identity(k);
    for (std::size_t j = 0; j < n; ++j) {
        const PolyMatrix block = tensor_rep(alpha, p, FreeWord::generator(static_cast<int>(j))) - id;
        tc.d1.set_block(j * k, 0, block);
        tc.gen_dets.push_back(det(block, budget));
        if (!tc.pivot && !tc.gen_dets.back().is_zero()) tc.pivot = j;
    }

    tc.d2 = PolyMatrix(m * k, n * k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GroupRingElement der =
                fox_derivative(p.relators()[i], static_cast<int>(j), static_cast<int>(n));
            if (der.is_zero()) continue;
            tc.d2.set_block(i * k, j * k, tensor_rep(alpha, p, der));
        }

    if (!(tc.d2 * tc.d1).is_zero())
        throw std::logic_error("assemble: chain condition d2*d1 = 0 violated");
    return tc;
}

/// Order of the twisted zeroth homology: gcd over Z[t^~] of the k x k minors
/// of d1. Computed through the Q[t^~] invariant factors; the result is
/// primitive because some generator has phi != 0, and its block minor
/// det(alpha(x) t^e - I) has extreme coefficient det(alpha(x)) = +-1.
inline LaurentPoly delta0(const TwistedComplex& tc, const Budget* budget = nullptr) {
    const SnfResult s = snf_q(tc.d1, budget);
    if (s.rank < tc.k) return LaurentPoly();
    LaurentPoly prod = LaurentPoly::one();
    for (const auto& f : s.factors) prod *= f;
    return prod.primitive_part().canonical();
}

struct Delta1Q {
    LaurentPoly value;          // primitive integer lift, canonical; zero iff free_rank > 0
    std::size_t free_rank = 0;  // rank of the free part of H1 over Q[t^~]
};

/// Order of the twisted first homology over Q[t^~], lifted to a primitive
/// integer polynomial. The cycle module ker d1 is computed as an echelon
/// kernel basis; the rows of d2 are expressed in that basis (exact division,
/// guaranteed by the chain condition) and the order is the product of the
/// invariant factors of the resulting coefficient matrix.
inline Delta1Q delta1_q(const TwistedComplex& tc, const Budget* budget = nullptr) {
    const PolyMatrix kernel = kernel_basis_q(tc.d1, budget);
    Delta1Q out;
    if (kernel.rows() == 0) {
        if (!tc.d2.is_zero())
            throw std::logic_error("delta1_q: boundary rows escape a trivial cycle module");
        out.value = LaurentPoly::one();
        return out;
    }
    const PolyMatrix x = express_in_rows(tc.d2, kernel, budget);

    const SnfResult h1 = snf_q(x, budget);
    if (h1.rank < kernel.rows()) {
        out.free_rank = kernel.rows() - h1.rank;
        return out;  // positive free rank: the order vanishes
    }
    LaurentPoly prod = LaurentPoly::one();
    for (const auto& f : h1.factors) prod *= f;
    out.value = prod.primitive_part().canonical();
    return out;
}

struct WadaPair {
    LaurentPoly num;  // det of d2 with the pivot block column struck
    LaurentPoly den;  // det(Phi(x_pivot) - I)
};

/// Wada pair at an explicit pivot column (used by column-symmetry checks).
inline WadaPair wada_at(const TwistedComplex& tc, std::size_t pivot_gen,
                        const Budget* budget = nullptr) {
    if (!tc.deficiency_one())
        throw std::invalid_argument("wada: not a deficiency-1 presentation");
    const PolyMatrix a = tc.d2.without_block_column(pivot_gen, tc.k);
    return WadaPair{det(a, budget), tc.gen_dets.at(pivot_gen)};
}

/// Wada determinant pair for deficiency-1 presentations. Throws when the
/// presentation is not deficiency-1; returns nullopt on a degenerate pivot.
inline std::optional<WadaPair> wada(const TwistedComplex& tc, const Budget* budget = nullptr) {
    if (!tc.deficiency_one())
        throw std::invalid_argument("wada: not a deficiency-1 presentation");
    if (!tc.pivot) return std::nullopt;
    return wada_at(tc, *tc.pivot, budget);
}

struct Delta1Z {
    LaurentPoly value;         // integral representative (primitive part on anomaly)
    Rational content_ratio{1}; // != 1 flags that the Z-division was not exact
};

/// Integral normalization of the first order via the relation
/// det(A_pivot) * Delta0 = Delta1 * det(Phi(x_pivot) - I) (up to unit):
/// the quotient (det(A_pivot) * Delta0) / det(Phi(x_pivot) - I) taken in
/// Z[t^~]. Unavailable (nullopt) without a pivot, without deficiency 1, or
/// when Delta0 = 0; callers then fall back to the Q-computation and report
/// monicness as indeterminate over Z.
inline std::optional<Delta1Z> delta1_z(const TwistedComplex& tc, const LaurentPoly& d0,
                                       const std::optional<WadaPair>& w) {
    if (!w || d0.is_zero()) return std::nullopt;
    const LaurentPoly numerator = w->num * d0;
    if (numerator.is_zero()) return Delta1Z{LaurentPoly(), 1};
    const auto q = exact_div(numerator, w->den);
    if (!q) throw std::logic_error("delta1_z: order relation division failed over Q");
    Delta1Z out;
    const LaurentPoly qc = q->canonical();
    if (qc.is_integral()) {
        out.value = qc;
        out.content_ratio = 1;
    } else {
        out.value = qc.primitive_part().canonical();
        out.content_ratio = qc.content_rational();
    }
    return out;
}

/// Everything the engine knows about one (presentation, representation) pair.
struct TwistedPolyReport {
    std::size_t rep_dimension = 1;
    RepProvenance rep_provenance = RepProvenance::Trivial;
    std::optional<HomAssignment> hom;

    LaurentPoly delta0;
    LaurentPoly delta1;  // primitive lift of the Q-order, canonical
    std::size_t free_rank = 0;
    std::optional<LaurentPoly> delta1_z;
    Rational content_ratio{1};
    std::optional<LaurentPoly> wada_num, wada_den;
    std::optional<std::size_t> pivot;
    std::optional<bool> monic;  // nullopt: indeterminate over Z
    int degree = 0;             // span of delta1 (0 when delta1 = 0)
    std::vector<std::string> notes;

    bool delta1_zero() const { return free_rank > 0; }
};

inline TwistedPolyReport compute_report(const Presentation& p, const Representation& alpha,
                                        const Budget* budget = nullptr) {
    const TwistedComplex tc = assemble(p, alpha, budget);
    TwistedPolyReport rep;
    rep.rep_dimension = alpha.dimension();
    rep.rep_provenance = alpha.provenance();
    rep.hom = alpha.hom();
    rep.pivot = tc.pivot;

    rep.delta0 = delta0(tc, budget);
    const Delta1Q d1q = delta1_q(tc, budget);
    rep.delta1 = d1q.value;
    rep.free_rank = d1q.free_rank;
    rep.degree = rep.delta1.is_zero() ? 0 : rep.delta1.span();

    std::optional<WadaPair> w;
    if (tc.deficiency_one()) {
        w = wada(tc, budget);
        if (!w) rep.notes.push_back("degenerate pivot: Wada invariant unavailable");
    } else {
        rep.notes.push_back("not deficiency-1: Wada invariant unavailable");
    }
    if (w) {
        rep.wada_num = w->num.canonical();
        rep.wada_den = w->den.canonical();
    }

    if (rep.delta1_zero()) {
        rep.monic = false;  // the zero polynomial is not monic
    } else if (auto z = delta1_z(tc, rep.delta0, w)) {
        rep.delta1_z = z->value;
        rep.content_ratio = z->content_ratio;
        if (z->content_ratio == 1) {
            rep.monic = is_monic(z->value);
        } else {
            rep.monic = std::nullopt;
            rep.notes.push_back("content ratio " + rational_to_string(z->content_ratio) +
                                ": monicness indeterminate over Z");
        }
    } else {
        rep.monic = std::nullopt;
        rep.notes.push_back("integral normalization unavailable: monicness indeterminate over Z");
    }
    return rep;
}

}  // namespace tap

#endif  // TAP_TWISTED_HPP
