#ifndef TRANSVERSAL_IO_HPP
#define TRANSVERSAL_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "transversal/cover.hpp"
#include "transversal/reductions.hpp"

namespace transversal {

using nlohmann::json;

// Canonical instance format: {"parts": [[labels...]...],
// "base_edges": [[u, v, multiplicity]...], "conflicts": [[[p,s],[p,s]]...]}.
// Parts in index order, conflicts normalized and sorted lexicographically.
inline json instance_to_json(const CoverInstance& g) {
    json j;
    j["parts"] = json::array();
    for (int v = 0; v < g.num_parts(); ++v) j["parts"].push_back(g.labels(v));
    j["base_edges"] = json::array();
    for (const auto& e : g.base_edges()) j["base_edges"].push_back({e.u, e.v, e.multiplicity});
    j["conflicts"] = json::array();
    for (const auto& [a, b] : g.conflict_edges()) {
        const ColourRef ca = g.colour_ref(a), cb = g.colour_ref(b);
        j["conflicts"].push_back({{ca.part, ca.slot}, {cb.part, cb.slot}});
    }
    return j;
}

inline CoverInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parts"))
        throw std::invalid_argument("instance: expected object with \"parts\"");
    std::vector<std::vector<std::string>> parts;
    for (const auto& p : j.at("parts")) parts.push_back(p.get<std::vector<std::string>>());
    std::vector<BaseEdge> base;
    if (j.contains("base_edges"))
        for (const auto& e : j.at("base_edges")) {
            if (!e.is_array() || (e.size() != 2 && e.size() != 3))
                throw std::invalid_argument("instance: base edge must be [u, v] or [u, v, mult]");
            base.push_back({e[0].get<int>(), e[1].get<int>(),
                            e.size() == 3 ? e[2].get<int>() : 1});
        }
    std::vector<std::pair<ColourRef, ColourRef>> conflicts;
    if (j.contains("conflicts"))
        for (const auto& c : j.at("conflicts")) {
            if (!c.is_array() || c.size() != 2)
                throw std::invalid_argument("instance: conflict must be [[p,s],[p,s]]");
            conflicts.push_back({{c[0][0].get<int>(), c[0][1].get<int>()},
                                 {c[1][0].get<int>(), c[1][1].get<int>()}});
        }
    return CoverInstance(std::move(parts), std::move(base), conflicts);
}

// Byte-stable text for digests and reproducibility checks (keys are emitted
// in sorted order by the JSON library).
inline std::string canonical_text(const CoverInstance& g) { return instance_to_json(g).dump(); }

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Non-cryptographic content digest of the canonical JSON.
inline std::string digest(const CoverInstance& g) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_text(g))));
    return buf;
}

inline void write_instance(const std::string& path, const CoverInstance& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << instance_to_json(g).dump(2) << "\n";
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return json::parse(in);
}

// Readers reject instances that fail validate() unless asked not to.
inline CoverInstance read_instance(const std::string& path, bool must_be_valid = true) {
    CoverInstance g = instance_from_json(read_json_file(path));
    if (must_be_valid) {
        const auto violations = validate(g);
        if (!violations.empty()) {
            std::ostringstream msg;
            msg << "invalid instance " << path << ":";
            for (const auto& v : violations) msg << " [" << v.rule << "] " << v.detail << ";";
            throw std::invalid_argument(msg.str());
        }
    }
    return g;
}

inline json colouring_to_json(const CoverInstance& g, const PartialColouring& phi) {
    json arr = json::array();
    for (int v = 0; v < g.num_parts(); ++v)
        if (phi.is_assigned(v)) arr.push_back({v, phi.slot(v)});
    return json{{"colouring", arr}};
}

inline PartialColouring colouring_from_json(const json& j, int num_parts) {
    const json& arr = j.is_object() && j.contains("colouring") ? j.at("colouring") : j;
    if (!arr.is_array()) throw std::invalid_argument("colouring: expected [[part, slot]...]");
    PartialColouring phi(num_parts);
    for (const auto& e : arr) {
        const int part = e[0].get<int>(), slot = e[1].get<int>();
        if (part < 0 || part >= num_parts)
            throw std::invalid_argument("colouring: part out of range");
        phi.assign(part, slot);
    }
    return phi;
}

inline json stats_to_json(const InstanceStats& s) {
    return json{{"max_degree", s.max_degree},
                {"max_avg_colour_degree", to_string(s.max_avg_colour_degree)},
                {"mu", s.max_colour_multiplicity},
                {"mu_avg", to_string(s.max_avg_colour_multiplicity)},
                {"base_max_degree", s.base_max_degree},
                {"min_list_size", s.min_list_size},
                {"max_list_size", s.max_list_size}};
}

}  // namespace transversal

#endif
