#ifndef TAP_PRESENTATION_HPP
#define TAP_PRESENTATION_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tap/words.hpp"

namespace tap {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

/// Finite group presentation together with a distinguished cohomology class
/// phi: generators -> Z. Generators are referred to by index internally and by
/// name at the interfaces. Optional component tags record which link component
/// a meridional generator belongs to (braid closures fill these in).
class Presentation {
  public:
    Presentation() = default;

    Presentation(std::vector<std::string> gen_names, std::vector<FreeWord> relators,
                 std::vector<int> phi, std::vector<int> components = {})
        : gens_(std::move(gen_names)),
          relators_(std::move(relators)),
          phi_(std::move(phi)),
          components_(std::move(components)) {
        if (phi_.size() != gens_.size())
            throw std::invalid_argument("presentation: phi size must match generator count");
        if (!components_.empty() && components_.size() != gens_.size())
            throw std::invalid_argument("presentation: component tags must match generator count");
    }

    const std::vector<std::string>& generator_names() const { return gens_; }
    const std::vector<FreeWord>& relators() const { return relators_; }
    const std::vector<int>& phi() const { return phi_; }
    const std::vector<int>& component_tags() const { return components_; }

    std::size_t num_generators() const { return gens_.size(); }
    std::size_t num_relators() const { return relators_.size(); }

    /// Generators minus relators; braid closures yield deficiency 1.
    long deficiency() const {
        return static_cast<long>(num_generators()) - static_cast<long>(num_relators());
    }

    std::optional<std::size_t> generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == name) return i;
        return std::nullopt;
    }

    /// Number of link components according to the tags (0 when untagged).
    std::size_t num_components() const {
        if (components_.empty()) return 0;
        return static_cast<std::size_t>(*std::max_element(components_.begin(), components_.end())) +
               1;
    }

    bool is_meridional() const {
        return std::all_of(phi_.begin(), phi_.end(), [](int v) { return v == 1; });
    }

    /// Signed phi-sum over the letters of w.
    long phi_of(const FreeWord& w) const {
        long s = 0;
        for (const Letter& l : w.letters()) {
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= gens_.size())
                throw std::out_of_range("phi_of: word uses unknown generator");
            s += static_cast<long>(l.sign) * phi_[static_cast<std::size_t>(l.gen)];
        }
        return s;
    }

    /// Structural validation: unique nonempty names, phi nontrivial,
    /// phi(r) = 0 for every relator, all letters in range. Collects every
    /// violation instead of stopping at the first.
    ValidationReport validate() const {
        ValidationReport rep;
        std::set<std::string> seen;
        for (const auto& n : gens_) {
            if (n.empty()) rep.fail("generator with empty name");
            if (!seen.insert(n).second) rep.fail("duplicate generator name '" + n + "'");
        }
        if (std::all_of(phi_.begin(), phi_.end(), [](int v) { return v == 0; }))
            rep.fail("phi is trivial (zero on every generator)");
        for (std::size_t r = 0; r < relators_.size(); ++r) {
            bool in_range = true;
            for (const Letter& l : relators_[r].letters())
                if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= gens_.size()) {
                    rep.fail("relator " + std::to_string(r) + " uses unknown generator index " +
                             std::to_string(l.gen));
                    in_range = false;
                }
            if (!in_range) continue;
            const long s = phi_of(relators_[r]);
            if (s != 0)
                rep.fail("phi(relator " + std::to_string(r) + ") = " + std::to_string(s) +
                         ", expected 0");
        }
        return rep;
    }

    void require_valid() const {
        ValidationReport rep = validate();
        if (!rep.ok) {
            std::string msg = "invalid presentation:";
            for (const auto& v : rep.violations) msg += " " + v + ";";
            throw std::invalid_argument(msg);
        }
    }

    /// Word in the file syntax: space-separated letters, a generator name for
    /// +1 and the name with capitalized first letter or a trailing apostrophe
    /// for -1, e.g. "x y x Y X Y" or "x y x y' x' y'".
    FreeWord parse_word(const std::string& text) const {
        std::istringstream in(text);
        std::vector<Letter> letters;
        std::string tok;
        while (in >> tok) {
            bool inv = false;
            std::string base = tok;
            if (!base.empty() && base.back() == '\'') {
                inv = true;
                base.pop_back();
            }
            auto idx = generator_index(base);
            if (!idx && !inv && !base.empty() && std::isupper(static_cast<unsigned char>(base[0]))) {
                std::string lowered = base;
                lowered[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lowered[0])));
                idx = generator_index(lowered);
                inv = true;
            }
            if (!idx)
                throw std::invalid_argument("unknown generator token '" + tok + "' in word");
            letters.push_back(Letter{static_cast<int>(*idx), inv ? -1 : 1});
        }
        return FreeWord::from_letters(letters);
    }

    std::string format_word(const FreeWord& w) const {
        std::string out;
        for (const Letter& l : w.letters()) {
            if (!out.empty()) out += ' ';
            const std::string& name = gens_[static_cast<std::size_t>(l.gen)];
            if (l.sign > 0) {
                out += name;
            } else {
                std::string up = name;
                up[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(up[0])));
                if (up != name && !generator_index(up))
                    out += up;
                else
                    out += name + "'";
            }
        }
        return out;
    }

  private:
    std::vector<std::string> gens_;
    std::vector<FreeWord> relators_;
    std::vector<int> phi_;
    std::vector<int> components_;
};

/// Connected sum along meridional generators: disjoint union of generators and
/// relators plus the gluing relator m0 * m1^-1. Both glued generators must
/// carry phi-value 1.
inline Presentation connected_sum(const Presentation& p0, const std::string& m0,
                                  const Presentation& p1, const std::string& m1) {
    auto i0 = p0.generator_index(m0);
    auto i1 = p1.generator_index(m1);
    if (!i0 || !i1) throw std::invalid_argument("connected_sum: unknown meridian generator");
    if (p0.phi()[*i0] != 1 || p1.phi()[*i1] != 1)
        throw std::invalid_argument("connected_sum: glued generators must have phi-value 1");

    std::vector<std::string> names = p0.generator_names();
    std::set<std::string> used(names.begin(), names.end());
    std::vector<std::string> renamed;  // names of p1's generators in the sum
    for (const auto& n : p1.generator_names()) {
        std::string cand = n;
        int suffix = 1;
        while (used.count(cand)) cand = n + "_" + std::to_string(++suffix);
        used.insert(cand);
        renamed.push_back(cand);
        names.push_back(cand);
    }

    const int offset = static_cast<int>(p0.num_generators());
    const auto shift_word = [&](const FreeWord& w) {
        std::vector<Letter> ls;
        for (const Letter& l : w.letters()) ls.push_back(Letter{l.gen + offset, l.sign});
        return FreeWord::from_letters(ls);
    };

    std::vector<FreeWord> relators = p0.relators();
    for (const auto& r : p1.relators()) relators.push_back(shift_word(r));
    relators.push_back(FreeWord::generator(static_cast<int>(*i0)) *
                       FreeWord::generator(offset + static_cast<int>(*i1), -1));

    std::vector<int> phi = p0.phi();
    phi.insert(phi.end(), p1.phi().begin(), p1.phi().end());

    // The sum is a knot-style presentation; component tags collapse to one.
    std::vector<int> comps(names.size(), 0);
    return Presentation(std::move(names), std::move(relators), std::move(phi), std::move(comps));
}

}  // namespace tap

#endif  // TAP_PRESENTATION_HPP
