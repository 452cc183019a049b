#ifndef TAP_CATALOG_HPP
#define TAP_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "tap/braid.hpp"
#include "tap/laurent.hpp"
#include "tap/presentation.hpp"

namespace tap {

/// Built-in desk corpus. Braid words are not ground truth by themselves:
/// the test suite recomputes each closure's order polynomial and matches it
/// against the table value below before anything here is trusted.
struct CatalogEntry {
    std::string name;
    BraidWord braid;
    LaurentPoly expected_alexander;  // canonical form
    bool fibered = false;
    int genus = 0;
    std::string comment;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        const auto poly = [](std::vector<std::pair<int, long>> terms) {
            LaurentPoly p;
            for (const auto& [e, c] : terms) p += LaurentPoly::term(Rational(c), e);
            return p.canonical();
        };
        std::vector<CatalogEntry> v;
        v.push_back({"unknot", BraidWord(2, {1}), poly({{0, 1}}), true, 0,
                     "closure of a single crossing"});
        v.push_back({"3_1", BraidWord(2, {1, 1, 1}), poly({{2, 1}, {1, -1}, {0, 1}}), true, 1,
                     "trefoil, torus knot T(2,3)"});
        v.push_back({"4_1", BraidWord(3, {1, -2, 1, -2}), poly({{2, 1}, {1, -3}, {0, 1}}), true,
                     1, "figure-eight"});
        v.push_back({"5_1", BraidWord(2, {1, 1, 1, 1, 1}), poly({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}}),
                     true, 2, "cinquefoil, torus knot T(2,5)"});
        v.push_back({"5_2", BraidWord(3, {1, 1, 1, 2, -1, 2}), poly({{2, 2}, {1, -3}, {0, 2}}),
                     false, 1, "first non-monic twist knot"});
        v.push_back({"6_1", BraidWord(4, {1, 1, 2, -1, -3, 2, -3}), poly({{2, 2}, {1, -5}, {0, 2}}),
                     false, 1, "slice twist knot"});
        v.push_back({"hopf", BraidWord(2, {1, 1}), poly({{1, 1}, {0, -1}}), true, 0,
                     "Hopf link, two components"});
        return v;
    }();
    return entries;
}

inline std::optional<CatalogEntry> find_catalog(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    return std::nullopt;
}

inline Presentation catalog_presentation(const CatalogEntry& e) {
    return braid_to_presentation(e.braid);
}

}  // namespace tap

#endif  // TAP_CATALOG_HPP
