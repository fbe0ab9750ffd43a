#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperchroma/covers.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/polynomial.hpp"

namespace hyperchroma {

using Json = nlohmann::ordered_json;

/// Coefficient list in ascending powers, as decimal strings (exact).
inline Json poly_to_json(const IntPolynomial& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
}

inline IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial json: expected array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(BigInt::from_string(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.push_back(BigInt(c.get<long long>()));
        else
            throw std::invalid_argument("polynomial json: coefficients must be strings or integers");
    }
    return IntPolynomial(std::move(coeffs));
}

/// Cover file format:
///   { "k": K, "edges": [ { "edge": [ids...], "maps": [[colors...], ...] }, ... ] }
/// Edge vertex lists are in the hypergraph's normalized (sorted) order and map
/// colors align with that order. Ids are numbers, or names resolved through
/// the optional table.
inline Json cover_to_json(const Hypergraph& h, const Cover& f,
                          const std::map<VertexId, std::string>* names = nullptr) {
    Json out;
    out["k"] = f.k;
    Json edges = Json::array();
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        Json entry;
        Json verts = Json::array();
        for (VertexId v : h.edge(e)) {
            if (names) {
                auto it = names->find(v);
                if (it == names->end())
                    throw std::invalid_argument("cover_to_json: vertex id without a name");
                verts.push_back(it->second);
            } else {
                verts.push_back(v);
            }
        }
        entry["edge"] = std::move(verts);
        Json maps = Json::array();
        for (const PartialMap& m : f.per_edge[e]) maps.push_back(m.colors);
        entry["maps"] = std::move(maps);
        edges.push_back(std::move(entry));
    }
    out["edges"] = std::move(edges);
    return out;
}

inline Cover cover_from_json(const Hypergraph& h, const Json& j,
                             const std::map<std::string, VertexId>* names = nullptr) {
    if (!j.is_object() || !j.contains("k") || !j.contains("edges"))
        throw std::invalid_argument("cover json: expected {\"k\":..., \"edges\":[...]}");
    Cover f;
    f.k = j.at("k").get<int>();
    f.per_edge.resize(h.edge_count());
    std::vector<bool> filled(h.edge_count(), false);
    for (const auto& entry : j.at("edges")) {
        std::vector<VertexId> verts;
        for (const auto& tok : entry.at("edge")) {
            if (tok.is_number_integer()) {
                verts.push_back(tok.get<VertexId>());
            } else if (tok.is_string() && names) {
                auto it = names->find(tok.get<std::string>());
                if (it == names->end())
                    throw std::invalid_argument("cover json: unknown vertex name \"" +
                                                tok.get<std::string>() + "\"");
                verts.push_back(it->second);
            } else {
                throw std::invalid_argument("cover json: vertex must be an id or a known name");
            }
        }
        auto idx = h.find_edge(verts);
        if (!idx) throw std::invalid_argument("cover json: edge not present in hypergraph");
        if (filled[*idx]) throw std::invalid_argument("cover json: duplicate edge entry");
        filled[*idx] = true;
        // maps are aligned to the order the file lists the edge's vertices in;
        // realign to the normalized (sorted) order used internally
        std::vector<std::size_t> order(verts.size());
        const auto& sorted = h.edge(*idx);
        for (std::size_t pos = 0; pos < verts.size(); ++pos) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), verts[pos]);
            order[pos] = static_cast<std::size_t>(it - sorted.begin());
        }
        for (const auto& row : entry.at("maps")) {
            PartialMap m;
            m.edge = *idx;
            m.colors.assign(sorted.size(), 0);
            if (row.size() != verts.size())
                throw std::invalid_argument("cover json: map length does not match edge size");
            for (std::size_t pos = 0; pos < verts.size(); ++pos)
                m.colors[order[pos]] = row[pos].get<int>();
            f.per_edge[*idx].push_back(std::move(m));
        }
    }
    if (auto bad = validate_cover(h, f))
        throw std::invalid_argument("cover json: invalid cover: " + bad->message);
    return f;
}

}  // namespace hyperchroma
