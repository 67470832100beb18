#pragma once

// JSON form of SurgeryData; requires nlohmann/json on the include path
// (vendor/json.hpp). Kept out of surgery.hpp so the core stays header-light.

#include "gcx/surgery.hpp"

#include <json.hpp>

namespace gcx {

inline nlohmann::json surgery_to_json(const SurgeryData& data) {
    nlohmann::json j;
    j["d"] = data.d;
    j["v"] = data.arrow.base.underlying.v;
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& ed : data.arrow.base.underlying.edges) edges.push_back({ed.a, ed.b});
    j["edges"] = edges;
    nlohmann::json dirs = nlohmann::json::array();
    for (const auto& [tail, head] : data.arrow.direction) dirs.push_back({tail, head});
    j["directions"] = dirs;
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& vertex_slots : data.arrow.slots) {
        nlohmann::json triple = nlohmann::json::array();
        for (const HalfEdgeSlot& h : vertex_slots)
            triple.push_back({{"edge", h.edge}, {"incoming", h.incoming}});
        slots.push_back(triple);
    }
    j["slots"] = slots;
    return j;
}

inline SurgeryData surgery_from_json(const nlohmann::json& j) {
    LabelledGraph g;
    g.v = j.at("v").get<int>();
    for (const auto& pair : j.at("edges"))
        g.edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    g.validate();
    CanonicalGraph cls = canonical_class(g);
    if (cls.underlying != g)
        throw GraphError("surgery_from_json: edge list must be in canonical form");

    ArrowGraph arrow;
    arrow.base = cls;
    for (const auto& pair : j.at("directions"))
        arrow.direction.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    for (const auto& triple : j.at("slots")) {
        std::array<HalfEdgeSlot, 3> s;
        for (int i = 0; i < 3; ++i) {
            s[static_cast<std::size_t>(i)].edge = triple.at(i).at("edge").get<int>();
            s[static_cast<std::size_t>(i)].incoming = triple.at(i).at("incoming").get<bool>();
        }
        arrow.slots.push_back(s);
    }
    arrow.validate();
    return make_surgery_data(arrow, j.at("d").get<int>());
}

} // namespace gcx
