#ifndef TAP_LAURENT_HPP
#define TAP_LAURENT_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tap/rational.hpp"

namespace tap {

/// Univariate Laurent polynomial with exact rational coefficients.
///
/// Invariants: no stored coefficient is zero; the zero polynomial has empty
/// support. The ring tag (integral vs rational) is a derived property of the
/// coefficients, see is_integral().
///
/// Alexander-type invariants are only defined up to a unit c*t^k, so most
/// cross-module comparisons go through canonical() (unit +-t^k over Z) or
/// monic_canonical() (unit c*t^k over Q).
class LaurentPoly {
  public:
    LaurentPoly() = default;

    explicit LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }

    explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    /// c * t^e
    static LaurentPoly term(const Rational& c, int e) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }

    static LaurentPoly t(int e = 1) { return term(1, e); }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeff(0) == 1; }

    /// True when every coefficient is an integer (ring tag INT).
    bool is_integral() const {
        for (const auto& [e, c] : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    Rational coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    int min_exp() const {
        require_nonzero("min_exp");
        return coeffs_.begin()->first;
    }

    int max_exp() const {
        require_nonzero("max_exp");
        return coeffs_.rbegin()->first;
    }

    /// Degree span max_exp - min_exp; the unit-invariant notion of degree.
    int span() const { return max_exp() - min_exp(); }

    Rational leading_coeff() const {
        require_nonzero("leading_coeff");
        return coeffs_.rbegin()->second;
    }

    Rational trailing_coeff() const {
        require_nonzero("trailing_coeff");
        return coeffs_.begin()->second;
    }

    std::size_t term_count() const { return coeffs_.size(); }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// p * t^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, cc] : coeffs_) r.coeffs_[e] = cc * c;
        return r;
    }

    /// Representative modulo units +-t^k of Z[t^~]: zero maps to zero;
    /// otherwise min exponent 0 and positive leading coefficient. Idempotent.
    LaurentPoly canonical() const {
        if (is_zero()) return *this;
        LaurentPoly r = shifted(-min_exp());
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }

    /// Representative modulo units c*t^k of Q[t^~]: min exponent 0, leading
    /// coefficient 1.
    LaurentPoly monic_canonical() const {
        if (is_zero()) return *this;
        return shifted(-min_exp()).scaled(1 / leading_coeff());
    }

    /// Positive rational c with *this = c * primitive_part().
    Rational content_rational() const {
        require_nonzero("content_rational");
        Integer g = 0, l = 1;
        for (const auto& [e, c] : coeffs_) {
            g = tap::gcd(g, num(c));
            l = tap::lcm(l, den(c));
        }
        return Rational(abs(g), l);
    }

    /// Integer-coefficient polynomial with coefficient gcd 1; sign pattern of
    /// *this is preserved. primitive_part of zero is zero.
    LaurentPoly primitive_part() const {
        if (is_zero()) return *this;
        return scaled(1 / content_rational());
    }

    /// gcd of the integer coefficients (requires integral input), >= 0.
    Integer content() const {
        if (!is_integral())
            throw std::invalid_argument("content: polynomial has non-integer coefficients");
        Integer g = 0;
        for (const auto& [e, c] : coeffs_) g = tap::gcd(g, num(c));
        return abs(g);
    }

    /// Human-readable form, highest power first, e.g. "2t^2 - 3t + 2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1 || e == 0) os << rational_to_string(a);
            if (e != 0) {
                if (a != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void add_term(int e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    void require_nonzero(const char* who) const {
        if (is_zero()) throw std::domain_error(std::string(who) + ": zero polynomial");
    }

    std::map<int, Rational> coeffs_;
};

/// Quotient/remainder in Q[t^~]: a = q*b + r with span(r) < span(b) or r = 0.
/// Units t^k are absorbed into the quotient, so this is Euclidean division for
/// the Laurent ring with the degree span as size function.
inline std::pair<LaurentPoly, LaurentPoly> div_mod_q(const LaurentPoly& a,
                                                     const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("div_mod_q: division by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    LaurentPoly rem = a;
    LaurentPoly quot;
    // Ordinary polynomial long division after aligning minimal exponents.
    while (!rem.is_zero() && rem.max_exp() - a.min_exp() >= b.span()) {
        const int e = rem.max_exp() - b.max_exp();
        const LaurentPoly m = LaurentPoly::term(rem.leading_coeff() / b.leading_coeff(), e);
        quot += m;
        rem -= m * b;
    }
    return {quot, rem};
}

/// Exact quotient a/b in Q[t^~] when the division has no remainder.
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return LaurentPoly();
    auto [q, r] = div_mod_q(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

/// Monic-canonical gcd in Q[t^~] (Euclidean algorithm); gcd(0,0) = 0.
inline LaurentPoly gcd_q(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = div_mod_q(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic_canonical();
}

/// Does p divide q in Z[t^~] (t^k and -1 are units)?
/// Convention: every p divides 0; 0 divides only 0.
inline bool divides(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) return true;
    if (p.is_zero()) return false;
    if (!p.is_integral() || !q.is_integral())
        throw std::invalid_argument("divides: expects integer-coefficient polynomials");
    // Z[t^~] factors as (integer content) x (primitive part); Gauss's lemma
    // reduces primitive divisibility to divisibility in Q[t].
    if (q.content() % p.content() != 0) return false;
    auto [quot, rem] = div_mod_q(q.primitive_part(), p.primitive_part());
    (void)quot;
    return rem.is_zero();
}

/// gcd in Z[t^~] up to unit: (gcd of integer contents) * (primitive gcd over
/// Q[t], made primitive), canonicalized. Errors on an empty list.
inline LaurentPoly gcd_z(const std::vector<LaurentPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("gcd_z: empty list");
    Integer content_gcd = 0;
    LaurentPoly prim_gcd;
    for (const auto& p : ps) {
        if (!p.is_integral())
            throw std::invalid_argument("gcd_z: expects integer-coefficient polynomials");
        if (p.is_zero()) continue;
        content_gcd = tap::gcd(content_gcd, p.content());
        prim_gcd = gcd_q(prim_gcd, p.primitive_part());
    }
    if (content_gcd == 0) return LaurentPoly();  // all inputs zero
    LaurentPoly g = prim_gcd.primitive_part().scaled(Rational(content_gcd));
    return g.canonical();
}

/// Monic over Z[t^~]: the top coefficient of the canonical form is 1 and the
/// integer content is 1, i.e. the leading coefficient is a unit of Z[t^~].
/// The zero polynomial is not monic (callers report it distinctly).
inline bool is_monic(const LaurentPoly& p) {
    if (p.is_zero()) return false;
    if (!p.is_integral())
        throw std::invalid_argument("is_monic: expects integer-coefficient polynomial");
    return p.canonical().leading_coeff() == 1 && p.content() == 1;
}

}  // namespace tap

#endif  // TAP_LAURENT_HPP
