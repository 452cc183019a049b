#ifndef TAP_SERIALIZE_HPP
#define TAP_SERIALIZE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tap/braid.hpp"
#include "tap/catalog.hpp"
#include "tap/homs.hpp"
#include "tap/laurent.hpp"
#include "tap/obstructions.hpp"
#include "tap/presentation.hpp"
#include "tap/representation.hpp"
#include "tap/twisted.hpp"

namespace tap {

/// Insertion-ordered JSON keeps report output byte-deterministic.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// polynomials: {"0":"1","1":"-1","2":"1"} with signed decimal exponent keys
// and integer or "p/q" coefficient strings
// ---------------------------------------------------------------------------

inline Json poly_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_to_string(c);
    return j;
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer n(s.substr(0, slash));
        const Integer d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed coefficient '" + s + "'");
    }
}

inline LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("polynomial: expected a JSON object");
    LaurentPoly p;
    for (const auto& [key, value] : j.items()) {
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("polynomial: malformed exponent '" + key + "'");
        }
        if (!value.is_string())
            throw std::invalid_argument("polynomial: coefficient for exponent '" + key +
                                        "' must be a string");
        p += LaurentPoly::term(parse_rational(value.get<std::string>()), e);
    }
    return p;
}

// ---------------------------------------------------------------------------
// input files: braid {"strands":2,"word":[1,1,1]} or presentation
// {"generators":["x","y"],"relators":["x y x Y X Y"],"phi":{"x":1,"y":1}}
// ---------------------------------------------------------------------------

inline Json braid_to_json(const BraidWord& b) {
    return Json{{"strands", b.strands}, {"word", b.letters}};
}

inline BraidWord braid_from_json(const Json& j) {
    if (!j.contains("strands") || !j["strands"].is_number_integer())
        throw std::invalid_argument("braid: field 'strands' must be an integer");
    if (!j.contains("word") || !j["word"].is_array())
        throw std::invalid_argument("braid: field 'word' must be an array of integers");
    std::vector<int> letters;
    for (const auto& l : j["word"]) {
        if (!l.is_number_integer())
            throw std::invalid_argument("braid: field 'word' must contain only integers");
        letters.push_back(l.get<int>());
    }
    return BraidWord(j["strands"].get<int>(), std::move(letters));
}

inline Json presentation_to_json(const Presentation& p) {
    Json j;
    j["generators"] = p.generator_names();
    Json rel = Json::array();
    for (const auto& r : p.relators()) rel.push_back(p.format_word(r));
    j["relators"] = std::move(rel);
    Json phi = Json::object();
    for (std::size_t i = 0; i < p.num_generators(); ++i)
        phi[p.generator_names()[i]] = p.phi()[i];
    j["phi"] = std::move(phi);
    if (!p.component_tags().empty()) j["components"] = p.component_tags();
    return j;
}

inline Presentation presentation_from_json(const Json& j) {
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("presentation: field 'generators' must be an array");
    std::vector<std::string> names;
    for (const auto& g : j["generators"]) {
        if (!g.is_string())
            throw std::invalid_argument("presentation: generator names must be strings");
        names.push_back(g.get<std::string>());
    }
    std::vector<int> phi(names.size(), 0);
    if (!j.contains("phi") || !j["phi"].is_object())
        throw std::invalid_argument("presentation: field 'phi' must be an object");
    for (const auto& [key, value] : j["phi"].items()) {
        auto it = std::find(names.begin(), names.end(), key);
        if (it == names.end())
            throw std::invalid_argument("presentation: phi names unknown generator '" + key +
                                        "'");
        if (!value.is_number_integer())
            throw std::invalid_argument("presentation: phi values must be integers");
        phi[static_cast<std::size_t>(it - names.begin())] = value.get<int>();
    }
    Presentation nameholder(names, {}, phi);
    std::vector<FreeWord> relators;
    if (j.contains("relators")) {
        if (!j["relators"].is_array())
            throw std::invalid_argument("presentation: field 'relators' must be an array");
        for (const auto& r : j["relators"]) {
            if (!r.is_string())
                throw std::invalid_argument("presentation: relators must be word strings");
            relators.push_back(nameholder.parse_word(r.get<std::string>()));
        }
    }
    std::vector<int> components;
    if (j.contains("components")) {
        for (const auto& c : j["components"]) components.push_back(c.get<int>());
        if (components.size() != names.size())
            throw std::invalid_argument("presentation: component tags must match generators");
    }
    return Presentation(std::move(names), std::move(relators), std::move(phi),
                        std::move(components));
}

// ---------------------------------------------------------------------------
// homomorphisms: {"degree":3,"images":{"x":[1,0,2],"y":[0,2,1]},"imageOrder":6}
// ---------------------------------------------------------------------------

inline Json hom_to_json(const HomAssignment& h, const Presentation& p) {
    Json images = Json::object();
    for (std::size_t i = 0; i < h.images.size(); ++i)
        images[p.generator_names()[i]] = h.images[i].images();
    return Json{{"degree", h.degree}, {"images", std::move(images)}, {"imageOrder", h.image_order}};
}

inline HomAssignment hom_from_json(const Json& j, const Presentation& p) {
    HomAssignment h;
    h.degree = j.at("degree").get<int>();
    h.images.resize(p.num_generators(), Permutation::identity(h.degree));
    for (const auto& [key, value] : j.at("images").items()) {
        const auto idx = p.generator_index(key);
        if (!idx) throw std::invalid_argument("hom: unknown generator '" + key + "'");
        h.images[*idx] = Permutation(value.get<std::vector<int>>());
    }
    h.image_order = j.value("imageOrder", 0);
    return h;
}

/// User representation file entry: {"dimension":2,"matrices":{"x":[[0,1],[1,0]],...}}
inline Representation representation_from_json(const Json& j, const Presentation& p) {
    const std::size_t dim = j.at("dimension").get<std::size_t>();
    std::vector<IntMat> mats(p.num_generators(), IntMat::identity(dim));
    if (!j.contains("matrices") || !j["matrices"].is_object())
        throw std::invalid_argument("representation: field 'matrices' must be an object");
    for (const auto& [key, value] : j["matrices"].items()) {
        const auto idx = p.generator_index(key);
        if (!idx)
            throw std::invalid_argument("representation: unknown generator '" + key + "'");
        IntMat m(dim);
        if (!value.is_array() || value.size() != dim)
            throw std::invalid_argument("representation: matrix for '" + key + "' must be " +
                                        std::to_string(dim) + " rows");
        for (std::size_t i = 0; i < dim; ++i) {
            if (!value[i].is_array() || value[i].size() != dim)
                throw std::invalid_argument("representation: matrix for '" + key +
                                            "' must be square");
            for (std::size_t c = 0; c < dim; ++c)
                m.at(i, c) = Integer(value[i][c].get<long long>());
        }
        mats[*idx] = std::move(m);
    }
    return Representation::user(std::move(mats));
}

// ---------------------------------------------------------------------------
// reports and verdicts
// ---------------------------------------------------------------------------

inline Json rep_info_to_json(const TwistedPolyReport& r, const Presentation& p) {
    Json j;
    j["provenance"] = to_string(r.rep_provenance);
    j["dimension"] = r.rep_dimension;
    if (r.hom) j["hom"] = hom_to_json(*r.hom, p);
    return j;
}

inline Json report_to_json(const TwistedPolyReport& r, const Presentation& p) {
    Json j;
    j["delta0"] = poly_to_json(r.delta0);
    j["delta1"] = poly_to_json(r.delta1);
    j["delta1Zero"] = r.delta1_zero();
    j["freeRank"] = r.free_rank;
    if (r.delta1_z) {
        j["delta1Z"] = poly_to_json(*r.delta1_z);
        j["contentRatio"] = rational_to_string(r.content_ratio);
    }
    if (r.monic.has_value())
        j["monic"] = *r.monic;
    else
        j["monic"] = nullptr;
    j["degree"] = r.degree;
    if (r.wada_num && r.wada_den) {
        Json w;
        w["num"] = poly_to_json(*r.wada_num);
        w["den"] = poly_to_json(*r.wada_den);
        if (r.pivot) w["pivot"] = p.generator_names()[*r.pivot];
        j["wada"] = std::move(w);
    }
    j["rep"] = rep_info_to_json(r, p);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline Json fiber_verdict_to_json(const FiberVerdict& v, const Presentation& p) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.certificate) {
        Json c;
        c["degree"] = v.certificate->degree;
        c["rep"] = hom_to_json(v.certificate->hom, p);
        c["reason"] = to_string(v.certificate->reason);
        c["report"] = report_to_json(v.certificate->report, p);
        j["certificate"] = std::move(c);
    }
    Json tested = Json::array();
    for (const auto& log : v.tested) {
        Json t;
        t["degree"] = log.degree;
        t["homCount"] = log.hom_count;
        if (log.skipped_dim_cap > 0) t["skippedDimCap"] = log.skipped_dim_cap;
        if (!log.complete) t["complete"] = false;
        tested.push_back(std::move(t));
    }
    j["tested"] = std::move(tested);
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

inline Json divisibility_to_json(const DivisibilityCheck& d) {
    Json j;
    j["holds"] = d.holds;
    j["lower"] = poly_to_json(d.lower);
    j["upper"] = poly_to_json(d.upper);
    if (!d.notes.empty()) j["notes"] = d.notes;
    return j;
}

inline Json ribbon_report_to_json(const RibbonReport& r, const Presentation& lower,
                                  const Presentation& upper) {
    Json j;
    j["lower"] = r.lower_name;
    j["upper"] = r.upper_name;
    j["verdict"] = to_string(r.verdict);
    j["divisibility"] = divisibility_to_json(r.divisibility);
    Json deg;
    deg["available"] = r.degrees.available;
    if (r.degrees.available) {
        deg["lowerDegree"] = r.degrees.lower_degree;
        deg["upperDegree"] = r.degrees.upper_degree;
        deg["nondecreasing"] = r.degrees.nondecreasing;
    }
    deg["caveat"] = r.degrees.caveat;
    j["degrees"] = std::move(deg);
    j["upperFiberedFlag"] = r.upper_fibered_flag;
    if (r.fibered_transfer) {
        Json t;
        t["degree"] = r.fibered_transfer->degree;
        t["rep"] = hom_to_json(r.fibered_transfer->hom, lower);
        t["reason"] = to_string(r.fibered_transfer->reason);
        t["report"] = report_to_json(r.fibered_transfer->report, lower);
        j["fiberedTransfer"] = std::move(t);
    }
    if (!r.conditional.empty()) {
        Json cs = Json::array();
        for (const auto& c : r.conditional) {
            Json cj;
            cj["label"] = c.label;
            cj["divisibility"] = divisibility_to_json(c.divisibility);
            cs.push_back(std::move(cj));
        }
        j["conditional"] = std::move(cs);
    }
    (void)upper;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline Json catalog_entry_to_json(const CatalogEntry& e) {
    Json j;
    j["name"] = e.name;
    j["braid"] = braid_to_json(e.braid);
    j["alexander"] = poly_to_json(e.expected_alexander);
    j["fibered"] = e.fibered;
    j["genus"] = e.genus;
    j["comment"] = e.comment;
    return j;
}

}  // namespace tap

#endif  // TAP_SERIALIZE_HPP
