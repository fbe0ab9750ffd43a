#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchroma/harness.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/serialize.hpp"

namespace hyperchroma {

/// A hypergraph together with the user-visible vertex names. Generated
/// instances use the decimal ids as names; parsed files keep the declared
/// names (ids are assigned in declaration order, starting at 1).
struct NamedHypergraph {
    Hypergraph h;
    std::map<VertexId, std::string> name_of;
    std::map<std::string, VertexId> id_of;

    std::string name(VertexId v) const {
        auto it = name_of.find(v);
        return it == name_of.end() ? std::to_string(v) : it->second;
    }
};

inline NamedHypergraph with_numeric_names(Hypergraph h) {
    NamedHypergraph out;
    for (VertexId v : h.vertices()) {
        out.name_of[v] = std::to_string(v);
        out.id_of[std::to_string(v)] = v;
    }
    out.h = std::move(h);
    return out;
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format:
///   # comment
///   vertices: a b c        (optional with infer_vertices)
///   edge: a b c
/// Tokens are whitespace-separated names. Errors carry line numbers.
inline NamedHypergraph parse_hypergraph_text(std::istream& in, const std::string& source,
                                             bool infer_vertices = false) {
    NamedHypergraph out;
    std::vector<std::string> declared;
    std::vector<std::vector<std::string>> edge_names;
    std::vector<std::size_t> edge_lines;
    bool saw_vertices = false;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](std::size_t ln, const std::string& msg) -> void {
        throw ParseError(source + ":" + std::to_string(ln) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "vertices:") {
            if (saw_vertices) fail(lineno, "duplicate vertices: line");
            saw_vertices = true;
            std::string tok;
            while (ls >> tok) {
                if (out.id_of.count(tok)) fail(lineno, "duplicate vertex \"" + tok + "\"");
                VertexId id = static_cast<VertexId>(declared.size()) + 1;
                declared.push_back(tok);
                out.id_of[tok] = id;
                out.name_of[id] = tok;
            }
        } else if (head == "edge:") {
            std::vector<std::string> names;
            std::string tok;
            while (ls >> tok) names.push_back(tok);
            if (names.size() < 2) fail(lineno, "edge needs at least 2 vertices");
            for (std::size_t i = 0; i < names.size(); ++i)
                for (std::size_t j = i + 1; j < names.size(); ++j)
                    if (names[i] == names[j])
                        fail(lineno, "repeated vertex \"" + names[i] + "\" in edge");
            edge_names.push_back(std::move(names));
            edge_lines.push_back(lineno);
        } else {
            fail(lineno, "unknown directive \"" + head + "\" (expected vertices: or edge:)");
        }
    }
    if (!saw_vertices) {
        if (!infer_vertices)
            throw ParseError(source + ": missing vertices: line (pass --infer-vertices to derive "
                                      "the vertex set from the edges)");
        for (const auto& names : edge_names)
            for (const auto& nm : names)
                if (!out.id_of.count(nm)) {
                    VertexId id = static_cast<VertexId>(declared.size()) + 1;
                    declared.push_back(nm);
                    out.id_of[nm] = id;
                    out.name_of[id] = nm;
                }
    }
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < edge_names.size(); ++i) {
        std::vector<VertexId> e;
        for (const auto& nm : edge_names[i]) {
            auto it = out.id_of.find(nm);
            if (it == out.id_of.end())
                fail(edge_lines[i], "unknown vertex \"" + nm + "\"");
            e.push_back(it->second);
        }
        edges.push_back(std::move(e));
    }
    std::vector<VertexId> verts;
    for (std::size_t i = 1; i <= declared.size(); ++i) verts.push_back(static_cast<VertexId>(i));
    std::vector<std::vector<VertexId>> dedup_check = edges;
    for (auto& e : dedup_check) std::sort(e.begin(), e.end());
    std::sort(dedup_check.begin(), dedup_check.end());
    if (std::adjacent_find(dedup_check.begin(), dedup_check.end()) != dedup_check.end())
        throw ParseError(source + ": duplicate edge");
    out.h = Hypergraph::from_edges(std::move(verts), std::move(edges));
    return out;
}

inline NamedHypergraph parse_hypergraph_file(const std::string& path,
                                             bool infer_vertices = false) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_hypergraph_text(in, path, infer_vertices);
}

inline std::string write_hypergraph(const NamedHypergraph& nh) {
    std::ostringstream os;
    os << "vertices:";
    for (VertexId v : nh.h.vertices()) os << " " << nh.name(v);
    os << "\n";
    for (const auto& e : nh.h.edges()) {
        os << "edge:";
        for (VertexId v : e) os << " " << nh.name(v);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Chromatic cache persistence: append-only "key<TAB>c0,c1,..." lines.
// ---------------------------------------------------------------------------

/// Loads cache entries; returns the set of keys now backed by the file so a
/// later save can stay append-only. Corrupt entries are skipped with a
/// warning and never trusted.
inline std::set<std::string> load_cache_file(const std::string& path, ChromaticCache& cache,
                                             std::ostream& warn = std::cerr) {
    std::set<std::string> on_disk;
    std::ifstream in(path);
    if (!in) return on_disk;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            warn << "cache: skipping corrupt entry at " << path << ":" << lineno << "\n";
            continue;
        }
        std::string key = line.substr(0, tab);
        std::vector<BigInt> coeffs;
        bool ok = true;
        std::istringstream cs(line.substr(tab + 1));
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            if (tok.empty()) continue;
            try {
                coeffs.push_back(BigInt::from_string(tok));
            } catch (const std::exception&) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            warn << "cache: skipping corrupt entry at " << path << ":" << lineno << "\n";
            continue;
        }
        cache.insert(key, IntPolynomial(std::move(coeffs)));
        on_disk.insert(std::move(key));
    }
    return on_disk;
}

/// Appends entries that were not already backed by the file (sorted, so
/// identical runs append identical bytes). The file only ever grows.
inline void append_cache_file(const std::string& path, const ChromaticCache& cache,
                              const std::set<std::string>& on_disk) {
    std::vector<const std::string*> fresh;
    for (const auto& [k, v] : cache.entries())
        if (!on_disk.count(k)) fresh.push_back(&k);
    if (fresh.empty()) return;
    std::sort(fresh.begin(), fresh.end(), [](const auto* a, const auto* b) { return *a < *b; });
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    for (const auto* k : fresh) {
        out << *k << '\t';
        const IntPolynomial& p = *cache.find(*k);
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            if (i) out << ',';
            out << p.coefficients()[i].to_string();
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------

/// Compact human-readable digest of the interesting payload numbers.
inline std::string report_detail(const VerificationReport& r) {
    const Json& p = r.payload;
    std::ostringstream os;
    auto put = [&](const std::string& text) {
        if (os.tellp() > 0) os << "; ";
        os << text;
    };
    if (p.contains("threshold") && !p["threshold"].is_null())
        put("N=" + p["threshold"].get<std::string>());
    if (p.contains("evaluations") && p["evaluations"].is_array() && !p["evaluations"].empty()) {
        const Json& e = p["evaluations"][0];
        if (e.contains("P") && e.contains("bound"))
            put("P(" + e["k"].get<std::string>() + ")=" + e["P"].get<std::string>() + " vs bound " +
                e["bound"].get<std::string>());
        else if (e.contains("lhs"))
            put("value(" + std::to_string(e["k"].get<long long>()) + ")=" +
                e["lhs"].get<std::string>());
    }
    if (p.contains("witnesses") && p["witnesses"].is_array())
        for (const auto& w : p["witnesses"])
            if (w.contains("dp_exact"))
                put("dp(" + std::to_string(w["k"].get<long long>()) + ")=" +
                    std::to_string(w["dp_exact"].get<std::uint64_t>()) + " < P=" +
                    w["P"].get<std::string>());
    if (p.contains("levels")) {
        std::string flags;
        for (const auto& row : p["levels"])
            flags += row["is_level_mapping"].get<bool>() ? 'y' : 'n';
        put("level-slices=" + flags);
    }
    if (p.contains("qualifying_covers"))
        put(std::to_string(p["qualifying_covers"].get<std::uint64_t>()) + " qualifying covers");
    if (p.contains("equal") && p["equal"].is_boolean())
        put(std::string("polynomials ") + (p["equal"].get<bool>() ? "equal" : "differ"));
    if (p.contains("equal_covered"))
        put(std::string("identity holds: covered=") +
            (p["equal_covered"].get<bool>() ? "yes" : "no") + " spanning=" +
            (p["equal_spanning"].get<bool>() ? "yes" : "no"));
    return os.str();
}

inline std::string reports_to_markdown(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "| claim | instance | k | status | reason | detail |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        os << "| " << r.claim << " | " << r.instance << " | ";
        for (std::size_t i = 0; i < r.k_values.size(); ++i) {
            if (i) os << " ";
            os << r.k_values[i];
        }
        os << " | " << to_string(r.status) << " | " << r.reason << " | " << report_detail(r)
           << " |\n";
    }
    return os.str();
}

/// One row per (instance, claim, k); claims without a k range emit one row
/// with an empty k column.
inline std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "claim,instance,k,status,reason\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    for (const auto& r : reports) {
        if (r.k_values.empty()) {
            os << r.claim << "," << quote(r.instance) << ",," << to_string(r.status) << ","
               << r.reason << "\n";
        } else {
            for (long long k : r.k_values)
                os << r.claim << "," << quote(r.instance) << "," << k << ","
                   << to_string(r.status) << "," << r.reason << "\n";
        }
    }
    return os.str();
}

}  // namespace hyperchroma
