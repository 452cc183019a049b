#ifndef TAP_MATRIX_HPP
#define TAP_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tap/budget.hpp"
#include "tap/laurent.hpp"

namespace tap {

/// Dense matrix of Laurent polynomials.
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}

    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    LaurentPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& p : e_)
            if (!p.is_integral()) return false;
        return true;
    }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        PolyMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const LaurentPoly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const LaurentPoly& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        PolyMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    void set_block(std::size_t i0, std::size_t j0, const PolyMatrix& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
        PolyMatrix r(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    /// Copy with one k-wide block column removed (used to strike the pivot
    /// generator column of a Jacobian).
    PolyMatrix without_block_column(std::size_t block, std::size_t width) const {
        if ((block + 1) * width > cols_) throw std::invalid_argument("block column out of range");
        PolyMatrix r(rows_, cols_ - width);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j >= block * width && j < (block + 1) * width) continue;
                r.at(i, jj++) = at(i, j);
            }
        }
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<LaurentPoly> e_;
};

/// Cofactor expansion along the first row. Exponential; kept as the
/// cross-check oracle for small sizes and for tiny matrices.
inline LaurentPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return m.at(0, 0);
    LaurentPoly acc;
    std::vector<std::size_t> all_rows, all_cols;
    for (std::size_t i = 1; i < n; ++i) all_rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        all_cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) all_cols.push_back(c);
        LaurentPoly minor = det_cofactor(m.submatrix(all_rows, all_cols));
        LaurentPoly contrib = m.at(0, j) * minor;
        if (j % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

/// Exact determinant via Bareiss fraction-free elimination. Intermediate
/// entries are minors of the input, so the divisions are exact in the span
/// of the entries; an inexact division signals corrupted input.
inline LaurentPoly det(const PolyMatrix& input, const Budget* budget = nullptr) {
    if (input.rows() != input.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = input.rows();
    if (n == 0) return LaurentPoly::one();
    if (n <= 2) {
        if (n == 1) return input.at(0, 0);
        return input.at(0, 0) * input.at(1, 1) - input.at(0, 1) * input.at(1, 0);
    }
    PolyMatrix a = input;
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        budget_tick(budget, n - k);
        // Pivot: smallest degree span, then fewest terms, keeps growth down.
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            const LaurentPoly& c = a.at(i, k);
            if (c.is_zero()) continue;
            if (piv == n || c.span() < a.at(piv, k).span() ||
                (c.span() == a.at(piv, k).span() && c.term_count() < a.at(piv, k).term_count()))
                piv = i;
        }
        if (piv == n) return LaurentPoly();  // zero column below the diagonal
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly v = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto q = exact_div(v, prev);
                if (!q) throw std::logic_error("det: Bareiss division not exact");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = LaurentPoly();
        }
        prev = a.at(k, k);
    }
    LaurentPoly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

struct SnfResult {
    std::vector<LaurentPoly> factors;  ///< nonzero invariant factors d1 | d2 | ...
    std::size_t rank = 0;
};

struct SnfLeftResult {
    std::vector<LaurentPoly> factors;
    std::size_t rank = 0;
    PolyMatrix left;  ///< U with U*M*V = diag; rows rank.. span the left kernel
};

namespace detail {

/// Unit c*t^k that rescales the given entries to a primitive integer tuple
/// with minimal exponent 0, or the zero polynomial if all entries vanish or
/// no rescaling is needed.
inline LaurentPoly primitive_unit(const std::vector<const LaurentPoly*>& entries) {
    Rational content;
    int shift = 0;
    bool found = false;
    for (const LaurentPoly* e : entries) {
        if (e->is_zero()) continue;
        if (!found) {
            content = e->content_rational();
            shift = e->min_exp();
            found = true;
        } else {
            const Rational ec = e->content_rational();
            content =
                Rational(tap::gcd(num(content), num(ec)), tap::lcm(den(content), den(ec)));
            shift = std::min(shift, e->min_exp());
        }
    }
    if (!found || (content == 1 && shift == 0)) return LaurentPoly();
    return LaurentPoly::term(1 / content, -shift);
}

/// Smith normal form over Q[t^~] (a PID; units are c*t^k). Diagonalizes by
/// Euclidean row/column steps and enforces the divisibility chain before
/// recursing, so the final diagonal is d1 | d2 | ... automatically.
///
/// When want_left is set, accumulates U (row ops applied to I) such that the
/// rows of U past the rank form a free basis of the left kernel of M.
inline SnfLeftResult snf_engine(PolyMatrix a, bool want_left, const Budget* budget) {
    const std::size_t rows = a.rows(), cols = a.cols();
    SnfLeftResult out;
    PolyMatrix& u = out.left;
    if (want_left) u = PolyMatrix::identity(rows);

    const auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        if (want_left)
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    // row_i -= f * row_j
    const auto row_axpy = [&](std::size_t i, std::size_t j, const LaurentPoly& f) {
        if (f.is_zero()) return;
        for (std::size_t c = 0; c < cols; ++c)
            if (!a.at(j, c).is_zero()) a.at(i, c) -= f * a.at(j, c);
        if (want_left)
            for (std::size_t c = 0; c < u.cols(); ++c)
                if (!u.at(j, c).is_zero()) u.at(i, c) -= f * u.at(j, c);
    };
    // Rescale a row to a primitive integer row with minimal exponent 0 (the
    // same unit applies to U). Plain Euclidean elimination over Q[t] suffers
    // the classic intermediate coefficient swell; this keeps it tame.
    const auto row_normalize = [&](std::size_t i) {
        std::vector<const LaurentPoly*> entries;
        for (std::size_t c = 0; c < cols; ++c) entries.push_back(&a.at(i, c));
        const LaurentPoly unit = primitive_unit(entries);
        if (unit.is_zero()) return;
        for (std::size_t c = 0; c < cols; ++c)
            if (!a.at(i, c).is_zero()) a.at(i, c) *= unit;
        if (want_left)
            for (std::size_t c = 0; c < u.cols(); ++c)
                if (!u.at(i, c).is_zero()) u.at(i, c) *= unit;
    };
    const auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    };
    const auto col_axpy = [&](std::size_t i, std::size_t j, const LaurentPoly& f) {
        if (f.is_zero()) return;
        for (std::size_t r = 0; r < rows; ++r)
            if (!a.at(r, j).is_zero()) a.at(r, i) -= f * a.at(r, j);
    };
    // Column scalings only touch the untracked right transform.
    const auto col_normalize = [&](std::size_t j) {
        std::vector<const LaurentPoly*> entries;
        for (std::size_t r = 0; r < rows; ++r) entries.push_back(&a.at(r, j));
        const LaurentPoly unit = primitive_unit(entries);
        if (unit.is_zero()) return;
        for (std::size_t r = 0; r < rows; ++r)
            if (!a.at(r, j).is_zero()) a.at(r, j) *= unit;
    };

    std::size_t p = 0;
    const std::size_t pmax = std::min(rows, cols);
    while (p < pmax) {
        // Nonzero entry of smallest degree span in the working submatrix.
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = p; i < rows; ++i)
            for (std::size_t j = p; j < cols; ++j) {
                const LaurentPoly& c = a.at(i, j);
                if (c.is_zero()) continue;
                if (bi == rows || c.span() < a.at(bi, bj).span() ||
                    (c.span() == a.at(bi, bj).span() &&
                     c.term_count() < a.at(bi, bj).term_count())) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows) break;  // submatrix is zero
        row_swap(p, bi);
        col_swap(p, bj);
        row_normalize(p);

        for (;;) {
            budget_tick(budget);
            // Exhaust each (pivot, entry) pair like a primitive remainder
            // sequence before moving on. Interleaving single division steps
            // across several entries divides large-degree entries by small
            // pivots with swollen coefficients and goes exponential.
            for (std::size_t i = p + 1; i < rows; ++i) {
                while (!a.at(i, p).is_zero()) {
                    budget_tick(budget);
                    auto [q, r] = div_mod_q(a.at(i, p), a.at(p, p));
                    row_axpy(i, p, q);
                    row_normalize(i);
                    if (!a.at(i, p).is_zero()) row_swap(p, i);  // smaller pivot span
                }
            }
            bool row_clear = true;
            for (std::size_t j = p + 1; j < cols; ++j) {
                while (!a.at(p, j).is_zero()) {
                    budget_tick(budget);
                    auto [q, r] = div_mod_q(a.at(p, j), a.at(p, p));
                    col_axpy(j, p, q);
                    col_normalize(j);
                    if (!a.at(p, j).is_zero()) {
                        col_swap(p, j);
                        row_clear = false;  // swap may disturb cleared rows above
                    }
                }
            }
            // Column swaps cannot reintroduce entries below the pivot (both
            // columns are zero there), but a smaller pivot must re-reduce the
            // rows, so restart until both passes are clean.
            if (!row_clear) {
                bool column_dirty = false;
                for (std::size_t i = p + 1; i < rows && !column_dirty; ++i)
                    column_dirty = !a.at(i, p).is_zero();
                if (column_dirty) continue;
            }
            // Row and column are clear; make the pivot divide the rest of the
            // submatrix so the invariant-factor chain comes out sorted.
            bool chain_ok = true;
            for (std::size_t i = p + 1; i < rows && chain_ok; ++i)
                for (std::size_t j = p + 1; j < cols && chain_ok; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    auto [q, r] = div_mod_q(a.at(i, j), a.at(p, p));
                    (void)q;
                    if (!r.is_zero()) {
                        row_axpy(p, i, LaurentPoly(-1));  // fold row i into the pivot row
                        row_normalize(p);
                        chain_ok = false;
                    }
                }
            if (chain_ok) break;
        }
        ++p;
    }

    out.rank = p;
    out.factors.reserve(p);
    for (std::size_t i = 0; i < p; ++i) out.factors.push_back(a.at(i, i).monic_canonical());
    return out;
}

}  // namespace detail

/// Invariant factors and rank over Q[t^~] (each factor monic with minimal
/// exponent 0; d1 | d2 | ... | dr).
inline SnfResult snf_q(const PolyMatrix& m, const Budget* budget = nullptr) {
    auto r = detail::snf_engine(m, false, budget);
    return {std::move(r.factors), r.rank};
}

inline std::size_t rank_q(const PolyMatrix& m, const Budget* budget = nullptr) {
    return snf_q(m, budget).rank;
}

/// SNF with the left transform tracked.
inline SnfLeftResult snf_q_left(const PolyMatrix& m, const Budget* budget = nullptr) {
    return detail::snf_engine(m, true, budget);
}

/// Row echelon form over Q[t^~] by unimodular row operations only: the row
/// span is unchanged, pivot columns strictly increase, rows are primitive
/// integer rows. Rows of the accumulated left transform of an SNF can carry
/// large redundant entries; this pass shrinks a kernel basis to a usable one.
inline PolyMatrix hermite_rows(PolyMatrix a, const Budget* budget = nullptr) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const auto row_normalize = [&](std::size_t i) {
        std::vector<const LaurentPoly*> entries;
        for (std::size_t c = 0; c < cols; ++c) entries.push_back(&a.at(i, c));
        const LaurentPoly unit = detail::primitive_unit(entries);
        if (unit.is_zero()) return;
        for (std::size_t c = 0; c < cols; ++c)
            if (!a.at(i, c).is_zero()) a.at(i, c) *= unit;
    };
    for (std::size_t i = 0; i < rows; ++i) row_normalize(i);

    const auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            const LaurentPoly& e = a.at(i, c);
            if (e.is_zero()) continue;
            if (piv == rows || e.span() < a.at(piv, c).span() ||
                (e.span() == a.at(piv, c).span() && e.term_count() < a.at(piv, c).term_count()))
                piv = i;
        }
        if (piv == rows) continue;
        row_swap(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            while (!a.at(i, c).is_zero()) {
                budget_tick(budget);
                const auto [q, rem] = div_mod_q(a.at(i, c), a.at(r, c));
                for (std::size_t j = 0; j < cols; ++j)
                    if (!a.at(r, j).is_zero()) a.at(i, j) -= q * a.at(r, j);
                row_normalize(i);
                if (!a.at(i, c).is_zero()) row_swap(r, i);
            }
        }
        ++r;
    }
    // Drop all-zero rows (none appear when the input rows are independent).
    std::vector<std::size_t> keep, all_cols;
    for (std::size_t j = 0; j < cols; ++j) all_cols.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < cols && zero; ++j) zero = a.at(i, j).is_zero();
        if (!zero) keep.push_back(i);
    }
    return a.submatrix(keep, all_cols);
}

/// Rows form a free basis of the left kernel {v : v*M = 0} over Q[t^~];
/// row count = rows(M) - rank(M). The basis is in row echelon form, each row
/// a primitive integer row whose first nonzero entry has minimal exponent 0
/// and positive leading coefficient.
inline PolyMatrix kernel_basis_q(const PolyMatrix& m, const Budget* budget = nullptr) {
    auto s = snf_q_left(m, budget);
    const std::size_t dim = m.rows() - s.rank;
    std::vector<std::size_t> rows_idx(dim), cols_idx(m.rows());
    for (std::size_t i = 0; i < dim; ++i) rows_idx[i] = s.rank + i;
    for (std::size_t j = 0; j < m.rows(); ++j) cols_idx[j] = j;
    PolyMatrix k = hermite_rows(s.left.submatrix(rows_idx, cols_idx), budget);
    if (k.rows() != dim) throw std::logic_error("kernel_basis_q: kernel rows collapsed");
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) {
            if (k.at(i, j).is_zero()) continue;
            if (k.at(i, j).leading_coeff() < 0)
                for (std::size_t jj = j; jj < k.cols(); ++jj) k.at(i, jj) = -k.at(i, jj);
            break;
        }
    return k;
}

/// Writes each row of b as an exact Q[t^~]-combination of the rows of the
/// echelon matrix k (as produced by hermite_rows / kernel_basis_q), i.e.
/// returns x with x*k = b. Throws if a row of b lies outside the row span.
inline PolyMatrix express_in_rows(const PolyMatrix& b, const PolyMatrix& k,
                                  const Budget* budget = nullptr) {
    if (b.cols() != k.cols()) throw std::invalid_argument("express_in_rows: shape mismatch");
    std::vector<std::size_t> pivot_col(k.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) {
        std::size_t c = 0;
        while (c < k.cols() && k.at(i, c).is_zero()) ++c;
        if (c == k.cols()) throw std::invalid_argument("express_in_rows: zero basis row");
        if (i > 0 && c <= pivot_col[i - 1])
            throw std::invalid_argument("express_in_rows: basis not in echelon form");
        pivot_col[i] = c;
    }
    PolyMatrix x(b.rows(), k.rows());
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::vector<LaurentPoly> residual(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) residual[j] = b.at(r, j);
        for (std::size_t i = 0; i < k.rows(); ++i) {
            budget_tick(budget);
            const LaurentPoly& lead = residual[pivot_col[i]];
            if (lead.is_zero()) continue;
            auto q = exact_div(lead, k.at(i, pivot_col[i]));
            if (!q) throw std::logic_error("express_in_rows: row not in the span (division)");
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!k.at(i, j).is_zero()) residual[j] -= *q * k.at(i, j);
            x.at(r, i) = std::move(*q);
        }
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!residual[j].is_zero())
                throw std::logic_error("express_in_rows: row not in the span (residual)");
    }
    return x;
}

/// gcd over Z[t^~] of all size x size minors; 0 if they all vanish.
/// Plain enumeration -- meant for moderate sizes and for cross-checks.
inline LaurentPoly minors_gcd(const PolyMatrix& m, std::size_t size,
                              const Budget* budget = nullptr) {
    if (size > std::min(m.rows(), m.cols()) || size == 0)
        throw std::invalid_argument("minors_gcd: size out of range");
    if (!m.is_integral())
        throw std::invalid_argument("minors_gcd: expects integer-coefficient entries");

    std::vector<std::size_t> ri(size), ci(size);
    for (std::size_t i = 0; i < size; ++i) ri[i] = ci[i] = i;
    const auto advance = [&](std::vector<std::size_t>& idx, std::size_t limit) {
        std::size_t i = size;
        while (i > 0) {
            --i;
            if (idx[i] + (size - i) <= limit) {
                ++idx[i];
                for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    LaurentPoly g;
    const LaurentPoly unit_one = LaurentPoly::one();
    for (;;) {
        for (std::size_t i = 0; i < size; ++i) ci[i] = i;
        for (;;) {
            budget_tick(budget);
            g = gcd_z({g, det(m.submatrix(ri, ci), budget)});
            if (g == unit_one) return g;  // cannot shrink further
            if (!advance(ci, m.cols() - 1)) break;
        }
        if (!advance(ri, m.rows() - 1)) break;
    }
    return g.canonical();
}

}  // namespace tap

#endif  // TAP_MATRIX_HPP
