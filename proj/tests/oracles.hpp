// Test-only oracles, deliberately kept independent of the library's
// arithmetic paths: they work on bare exponent->coefficient maps and do their
// own schoolbook expansion, long division and Euclidean gcd.
#ifndef TAP_TESTS_ORACLES_HPP
#define TAP_TESTS_ORACLES_HPP

#include <map>
#include <random>
#include <vector>

#include "tap/laurent.hpp"
#include "tap/matrix.hpp"

namespace oracle {

using Coeffs = std::map<int, tap::Rational>;

inline Coeffs to_coeffs(const tap::LaurentPoly& p) {
    return Coeffs(p.terms().begin(), p.terms().end());
}

inline tap::LaurentPoly to_poly(const Coeffs& c) {
    tap::LaurentPoly p;
    for (const auto& [e, v] : c) p += tap::LaurentPoly::term(v, e);
    return p;
}

inline void add_term(Coeffs& c, int e, const tap::Rational& v) {
    auto it = c.find(e);
    if (it == c.end()) {
        if (v != 0) c.emplace(e, v);
    } else {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

/// Schoolbook expansion.
inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
    return r;
}

inline Coeffs sub(Coeffs a, const Coeffs& b) {
    for (const auto& [e, c] : b) add_term(a, e, -c);
    return a;
}

/// Long division a = q*b + r with span(r) < span(b), units t^k absorbed.
inline std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) {
    Coeffs q, r = a;
    if (a.empty()) return {q, r};
    const int amin = a.begin()->first;
    const int bspan = b.rbegin()->first - b.begin()->first;
    while (!r.empty() && r.rbegin()->first - amin >= bspan) {
        const int e = r.rbegin()->first - b.rbegin()->first;
        const tap::Rational c = r.rbegin()->second / b.rbegin()->second;
        add_term(q, e, c);
        Coeffs m;
        add_term(m, e, c);
        r = sub(r, mul(m, b));
    }
    return {q, r};
}

inline Coeffs euclid_gcd(Coeffs a, Coeffs b) {
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Alexander polynomial from a Seifert matrix: det(V - t V^T), expanded by
/// cofactors over the oracle's own arithmetic.
inline Coeffs seifert_alexander(const std::vector<std::vector<long>>& v) {
    const std::size_t g2 = v.size();
    std::vector<std::vector<Coeffs>> m(g2, std::vector<Coeffs>(g2));
    for (std::size_t i = 0; i < g2; ++i)
        for (std::size_t j = 0; j < g2; ++j) {
            add_term(m[i][j], 0, v[i][j]);
            add_term(m[i][j], 1, -tap::Rational(v[j][i]));
        }
    // recursive cofactor det
    struct Det {
        static Coeffs run(const std::vector<std::vector<Coeffs>>& a) {
            const std::size_t n = a.size();
            if (n == 0) {
                Coeffs one;
                add_term(one, 0, 1);
                return one;
            }
            if (n == 1) return a[0][0];
            Coeffs acc;
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::vector<Coeffs>> minor(n - 1, std::vector<Coeffs>(n - 1));
                for (std::size_t i = 1; i < n; ++i) {
                    std::size_t cc = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        if (c != j) minor[i - 1][cc++] = a[i][c];
                }
                Coeffs term = mul(a[0][j], run(minor));
                for (const auto& [e, c] : term) add_term(acc, e, (j % 2 == 0) ? c : -c);
            }
            return acc;
        }
    };
    return Det::run(m);
}

inline tap::LaurentPoly make_poly(const std::vector<std::pair<int, long>>& terms) {
    tap::LaurentPoly p;
    for (const auto& [e, c] : terms) p += tap::LaurentPoly::term(tap::Rational(c), e);
    return p;
}

/// Random integer Laurent polynomial with exponents in [0, max_deg].
inline tap::LaurentPoly random_poly(std::mt19937& rng, int max_deg = 3, int max_coeff = 3,
                                    bool allow_zero = true) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    tap::LaurentPoly p;
    for (int e = 0; e <= max_deg; ++e) p += tap::LaurentPoly::term(tap::Rational(coeff(rng)), e);
    if (!allow_zero && p.is_zero()) p += tap::LaurentPoly::one();
    return p;
}

inline tap::PolyMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                     int max_deg = 3, int max_coeff = 3) {
    tap::PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, max_deg, max_coeff);
    return m;
}

}  // namespace oracle

#endif
