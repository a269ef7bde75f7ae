#pragma once

// JSON bindings (nlohmann/json, ordered so output key order is stable).
//
// Parsing is structural only: from_json(MonodromyDatum) accepts any
// residues and leaves admissibility to validate(), so callers can report
// the full violation list for bad input instead of a parse abort.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "orbiclass/classify.hpp"
#include "orbiclass/datum.hpp"
#include "orbiclass/invariants.hpp"
#include "orbiclass/moves.hpp"

namespace orbiclass {

using json = nlohmann::ordered_json;

inline void to_json(json& j, const MonodromyDatum& m) {
    j = json{{"two_q", m.two_q}, {"genus", m.genus}, {"d", m.d}, {"x", m.x}};
}

inline void from_json(const json& j, MonodromyDatum& m) {
    j.at("two_q").get_to(m.two_q);
    j.at("genus").get_to(m.genus);
    j.at("d").get_to(m.d);
    j.at("x").get_to(m.x);
}

inline void to_json(json& j, const OrientableQuotientDatum& od) {
    j = json{{"two_q", od.two_q},
             {"genus_orientable", od.genus_orientable},
             {"x", od.x},
             {"c", od.c}};
}

inline void from_json(const json& j, OrientableQuotientDatum& od) {
    j.at("two_q").get_to(od.two_q);
    j.at("genus_orientable").get_to(od.genus_orientable);
    j.at("x").get_to(od.x);
    j.at("c").get_to(od.c);
}

inline MoveKind move_kind_from_string(const std::string& s) {
    if (s == "H1") return MoveKind::H1;
    if (s == "H2") return MoveKind::H2;
    if (s == "H3") return MoveKind::H3;
    if (s == "H4") return MoveKind::H4;
    throw std::invalid_argument("unknown move kind \"" + s + "\"");
}

inline void to_json(json& j, const Move& m) {
    j = json{{"kind", to_string(m.kind)}, {"i", m.i}, {"j", m.j}};
}

inline void from_json(const json& j, Move& m) {
    m.kind = move_kind_from_string(j.at("kind").get<std::string>());
    j.at("i").get_to(m.i);
    j.at("j").get_to(m.j);
}

inline void to_json(json& j, const ValidationError& e) {
    j = json{{"kind", to_string(e.kind)}, {"detail", e.detail}};
}

inline void to_json(json& j, const H2Invariant& h) {
    j = json{{"modulus", h.modulus}, {"values", h.values}};
}

inline void from_json(const json& j, H2Invariant& h) {
    j.at("modulus").get_to(h.modulus);
    j.at("values").get_to(h.values);
}

inline void to_json(json& j, const InvariantTuple& t) {
    j = json{{"two_q", t.two_q}, {"genus", t.genus}, {"isotropy", t.isotropy}};
    j["h1"] = t.h1 ? json(*t.h1) : json(nullptr);
    j["l"] = t.l;
    if (t.h2) j["h2"] = *t.h2;
    j["h2_applicable"] = t.h2_applicable;
    j["cover_genus"] = t.cover_genus;
}

inline void from_json(const json& j, InvariantTuple& t) {
    j.at("two_q").get_to(t.two_q);
    j.at("genus").get_to(t.genus);
    j.at("isotropy").get_to(t.isotropy);
    t.h1 = j.at("h1").is_null() ? std::nullopt : std::optional<int>(j.at("h1").get<int>());
    j.at("l").get_to(t.l);
    t.h2 = j.contains("h2") ? std::optional<H2Invariant>(j.at("h2").get<H2Invariant>())
                            : std::nullopt;
    j.at("h2_applicable").get_to(t.h2_applicable);
    j.at("cover_genus").get_to(t.cover_genus);
}

inline void to_json(json& j, const EulerCharacteristic& e) {
    j = json{{"chi", e.chi}, {"genus_cover", e.genus_cover}};
}

inline void to_json(json& j, const EmbeddabilityVerdict& v) {
    j = json{{"embeddable", v.embeddable}};
    j["condition"] = v.condition == 0 ? json(nullptr) : json(v.condition);
    j["notes"] = v.notes;
}

inline void to_json(json& j, const CensusClass& c) {
    j = json{{"tuple", c.tuple},
             {"representative", c.representative},
             {"vector_count", c.vector_count}};
}

inline void to_json(json& j, const CensusReport& rep) {
    json params{{"two_q", rep.two_q}, {"genus", rep.genus}};
    if (rep.constraint.r) params["r"] = *rep.constraint.r;
    if (rep.constraint.cone_orders) params["cone_orders"] = *rep.constraint.cone_orders;
    if (rep.constraint.max_cover_genus)
        params["max_cover_genus"] = *rep.constraint.max_cover_genus;
    j = json{{"parameters", std::move(params)},
             {"total_vectors", rep.total_vectors},
             {"classes", rep.classes}};
}

inline void to_json(json& j, const VerifyClass& c) {
    j = json{{"tuple", c.tuple}, {"orbit_count", c.orbit_count}};
}

inline void to_json(json& j, const SoundnessViolation& v) {
    j = json{{"orbit_representative", v.orbit_representative}, {"tuples", v.tuples}};
}

inline void to_json(json& j, const CompletenessViolation& v) {
    j = json{{"tuple", v.tuple},
             {"orbit_count", v.orbit_count},
             {"orbit_representatives", v.orbit_representatives}};
}

inline void to_json(json& j, const VerifyReport& rep) {
    j = json{{"parameters",
              json{{"two_q", rep.two_q},
                   {"genus_max", rep.genus_max},
                   {"r_max", rep.r_max},
                   {"bfs_cap", rep.bfs_cap}}},
             {"total_vectors", rep.total_vectors},
             {"total_orbits", rep.total_orbits},
             {"classes", rep.classes},
             {"soundness_violations", rep.soundness_violations},
             {"completeness_violations", rep.completeness_violations}};
}

// Loads one or more JSON documents from a file path, or from the string
// itself when it already looks like JSON (leading '{' or '['). A
// top-level array is flattened into its elements.
inline std::vector<json> load_documents(const std::string& source) {
    std::string text;
    const std::size_t first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in) throw std::runtime_error("cannot open input file \"" + source + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json parsed = json::parse(text);
    if (parsed.is_array()) return {parsed.begin(), parsed.end()};
    return {std::move(parsed)};
}

}  // namespace orbiclass
