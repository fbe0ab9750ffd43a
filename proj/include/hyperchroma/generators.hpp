#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchroma/hypergraph.hpp"

namespace hyperchroma {

namespace detail {

struct GenRng {  // splitmix64: portable deterministic stream
    std::uint64_t state;
    explicit GenRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

}  // namespace detail

/// Linear r-uniform cycle of the given length: len edges on len*(r-1)
/// vertices, consecutive edges sharing exactly one vertex.
inline Hypergraph gen_linear_cycle(int r, int len) {
    if (r < 2) throw std::invalid_argument("cycle: rank must be >= 2");
    if (len < 3) throw std::invalid_argument("cycle: length must be >= 3 to stay linear");
    int n = len * (r - 1);
    std::vector<VertexId> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<VertexId>> edges;
    for (int i = 0; i < len; ++i) {
        std::vector<VertexId> e;
        for (int j = 0; j <= r - 1; ++j) e.push_back((i * (r - 1) + j) % n + 1);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(std::move(verts), std::move(edges));
}

/// Random leaf-attached hypertree: each new edge meets the current tree in a
/// single existing vertex and brings r-1 fresh vertices. Connected, linear,
/// acyclic by construction.
inline Hypergraph gen_hypertree(int r, int m, std::uint64_t seed) {
    if (r < 2) throw std::invalid_argument("hypertree: rank must be >= 2");
    if (m < 1) throw std::invalid_argument("hypertree: must have at least one edge");
    detail::GenRng rng(seed);
    int n = r;
    std::vector<std::vector<VertexId>> edges;
    std::vector<VertexId> first;
    for (int i = 1; i <= r; ++i) first.push_back(i);
    edges.push_back(std::move(first));
    for (int j = 1; j < m; ++j) {
        VertexId attach = static_cast<VertexId>(rng.next() % static_cast<std::uint64_t>(n)) + 1;
        std::vector<VertexId> e{attach};
        for (int i = 0; i < r - 1; ++i) e.push_back(++n);
        edges.push_back(std::move(e));
    }
    std::vector<VertexId> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
    return Hypergraph::from_edges(std::move(verts), std::move(edges));
}

/// Two internally disjoint r-uniform paths of len1 and len2 edges between the
/// anchor vertices 1 and 2; every edge lies on the unique cycle, of length
/// len1 + len2.
inline Hypergraph gen_theta(int r, int len1, int len2) {
    if (r < 2) throw std::invalid_argument("theta: rank must be >= 2");
    if (len1 < 1 || len2 < 1) throw std::invalid_argument("theta: path lengths must be >= 1");
    if (r == 2 && len1 == 1 && len2 == 1)
        throw std::invalid_argument("theta: both paths of length 1 collapse to one 2-edge");
    VertexId next = 3;
    std::vector<std::vector<VertexId>> edges;
    auto add_path = [&](int len) {
        std::vector<VertexId> joints{1};
        for (int i = 1; i < len; ++i) joints.push_back(next++);
        joints.push_back(2);
        for (int t = 0; t < len; ++t) {
            std::vector<VertexId> e{joints[static_cast<std::size_t>(t)],
                                    joints[static_cast<std::size_t>(t) + 1]};
            for (int i = 0; i < r - 2; ++i) e.push_back(next++);
            edges.push_back(std::move(e));
        }
    };
    add_path(len1);
    add_path(len2);
    std::vector<VertexId> verts;
    for (VertexId v = 1; v < next; ++v) verts.push_back(v);
    return Hypergraph::from_edges(std::move(verts), std::move(edges));
}

/// Every subset of {1..n} of size >= 2 as an edge; singletons behind the flag
/// make every coloring improper (the hypergraph is then degenerate).
inline Hypergraph gen_complete(int n, bool include_singletons = false) {
    if (n < 2) throw std::invalid_argument("complete: n must be >= 2");
    if (n > 12) throw std::invalid_argument("complete: n too large (2^n edges)");
    std::vector<VertexId> verts;
    for (int i = 1; i <= n; ++i) verts.push_back(i);
    std::vector<std::vector<VertexId>> edges;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<VertexId> e;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U) e.push_back(i + 1);
        std::size_t min_size = include_singletons ? 1 : 2;
        if (e.size() >= min_size) edges.push_back(std::move(e));
    }
    if (include_singletons) {
        VertexId fresh = n + 1;
        return Hypergraph::internal(std::move(verts), std::move(edges), fresh);
    }
    return Hypergraph::from_edges(std::move(verts), std::move(edges));
}

/// Parses a generator spec of the form
///   cycle:R:LEN | hypertree:R:M[:SEED] | theta:R:LEN1:LEN2 |
///   complete:N[:singletons] | join:P:<inner spec>
inline Hypergraph generate_instance(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t colon = spec.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, colon - start));
        start = colon + 1;
    }
    auto arg = [&](std::size_t i) -> long long {
        if (i >= parts.size()) throw std::invalid_argument("generator spec: missing parameter in \"" + spec + "\"");
        try {
            return std::stoll(parts[i]);
        } catch (const std::exception&) {
            throw std::invalid_argument("generator spec: bad integer \"" + parts[i] + "\"");
        }
    };
    const std::string& name = parts.empty() ? spec : parts[0];
    if (name == "cycle") return gen_linear_cycle(static_cast<int>(arg(1)), static_cast<int>(arg(2)));
    if (name == "hypertree")
        return gen_hypertree(static_cast<int>(arg(1)), static_cast<int>(arg(2)),
                             parts.size() > 3 ? static_cast<std::uint64_t>(arg(3)) : 1ULL);
    if (name == "theta")
        return gen_theta(static_cast<int>(arg(1)), static_cast<int>(arg(2)),
                         static_cast<int>(arg(3)));
    if (name == "complete") {
        bool singles = parts.size() > 2 && parts[2] == "singletons";
        return gen_complete(static_cast<int>(arg(1)), singles);
    }
    if (name == "join") {
        if (parts.size() < 3) throw std::invalid_argument("generator spec: join:P:<inner>");
        std::string inner = spec.substr(spec.find(':', spec.find(':') + 1) + 1);
        return join_clique(generate_instance(inner), static_cast<int>(arg(1))).joined;
    }
    throw std::invalid_argument("generator spec: unknown generator \"" + name + "\"");
}

}  // namespace hyperchroma
