#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchroma {

using VertexId = int;

/// Immutable hypergraph value: an ordered vertex list plus a family of edges
/// (vertex sets). Edges are stored sorted, deduplicated, and the edge list is
/// kept in lexicographic order, so equal hypergraphs have equal
/// representations and edge indices are deterministic.
///
/// User-facing construction rejects edges of size < 2. Contraction can
/// legitimately produce size-1 edges; those are admitted through the internal
/// path and flagged via `degenerate()` (a size-1 edge makes every coloring
/// improper, so counting code can short-circuit to zero).
class Hypergraph {
public:
    static Hypergraph from_edges(std::vector<VertexId> vertices,
                                 std::vector<std::vector<VertexId>> edges) {
        for (auto& e : edges) {
            std::vector<VertexId> sorted = e;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("Hypergraph: repeated vertex in edge");
            if (sorted.size() < 2)
                throw std::invalid_argument("Hypergraph: edge of size < 2");
            e = std::move(sorted);
        }
        return make(std::move(vertices), std::move(edges), std::nullopt);
    }

    /// Internal constructor: admits size-1 edges (post-contraction artifacts).
    static Hypergraph internal(std::vector<VertexId> vertices,
                               std::vector<std::vector<VertexId>> edges,
                               VertexId next_fresh) {
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.empty()) throw std::invalid_argument("Hypergraph: empty edge");
        }
        return make(std::move(vertices), std::move(edges), next_fresh);
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
    const std::vector<VertexId>& edge(std::size_t i) const {
        if (i >= edges_.size()) throw std::out_of_range("Hypergraph: edge index out of range");
        return edges_[i];
    }
    bool degenerate() const { return degenerate_; }
    VertexId next_fresh() const { return next_fresh_; }

    bool has_vertex(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Position of v in the sorted vertex list.
    std::size_t vertex_index(VertexId v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            throw std::invalid_argument("Hypergraph: unknown vertex id");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::optional<std::size_t> find_edge(std::vector<VertexId> verts) const {
        std::sort(verts.begin(), verts.end());
        auto it = std::lower_bound(edges_.begin(), edges_.end(), verts);
        if (it != edges_.end() && *it == verts)
            return static_cast<std::size_t>(it - edges_.begin());
        return std::nullopt;
    }

    /// Normalized literal representation; memoization key for counting code.
    std::string key() const {
        std::string s;
        for (VertexId v : vertices_) {
            s += std::to_string(v);
            s += ',';
        }
        s += '|';
        for (const auto& e : edges_) {
            for (VertexId v : e) {
                s += std::to_string(v);
                s += ',';
            }
            s += ';';
        }
        return s;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

private:
    std::vector<VertexId> vertices_;            // sorted ascending
    std::vector<std::vector<VertexId>> edges_;  // each sorted; list sorted lexicographically
    bool degenerate_ = false;
    VertexId next_fresh_ = 1;

    static Hypergraph make(std::vector<VertexId> vertices,
                           std::vector<std::vector<VertexId>> edges,
                           std::optional<VertexId> next_fresh) {
        Hypergraph h;
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        if (!vertices.empty() && vertices.front() < 0)
            throw std::invalid_argument("Hypergraph: vertex ids must be nonnegative");
        h.vertices_ = std::move(vertices);
        for (const auto& e : edges)
            for (VertexId v : e)
                if (!h.has_vertex(v))
                    throw std::invalid_argument("Hypergraph: edge vertex " + std::to_string(v) +
                                                " not in vertex list");
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        h.edges_ = std::move(edges);
        for (const auto& e : h.edges_)
            if (e.size() == 1) h.degenerate_ = true;
        VertexId mx = h.vertices_.empty() ? 0 : h.vertices_.back();
        h.next_fresh_ = next_fresh ? *next_fresh : mx + 1;
        if (h.next_fresh_ <= mx) h.next_fresh_ = mx + 1;
        return h;
    }
};

struct ComponentPartition {
    std::vector<std::vector<VertexId>> blocks;  // each sorted; blocks ordered by first element
    std::size_t count() const { return blocks.size(); }
};

namespace detail {

class Dsu {
public:
    explicit Dsu(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Connected components; isolated vertices form singleton blocks.
inline ComponentPartition components(const Hypergraph& h) {
    detail::Dsu dsu(h.vertex_count());
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i)
            dsu.unite(h.vertex_index(e[0]), h.vertex_index(e[i]));
    std::map<std::size_t, std::vector<VertexId>> by_root;
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        by_root[dsu.find(i)].push_back(h.vertices()[i]);
    ComponentPartition part;
    for (auto& [root, block] : by_root) part.blocks.push_back(std::move(block));
    std::sort(part.blocks.begin(), part.blocks.end());
    return part;
}

inline Hypergraph delete_edge(const Hypergraph& h, std::size_t e) {
    if (e >= h.edge_count()) throw std::out_of_range("delete_edge: edge index out of range");
    std::vector<std::vector<VertexId>> edges = h.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    return Hypergraph::internal(h.vertices(), std::move(edges), h.next_fresh());
}

/// Identify all vertices of `group` into one fresh vertex. Edges meeting the
/// group are rewritten onto the fresh vertex; duplicates collapse; edges that
/// shrink to a single vertex are retained (degenerate).
inline Hypergraph contract_set(const Hypergraph& h, const std::vector<VertexId>& group) {
    if (group.empty()) throw std::invalid_argument("contract_set: empty vertex set");
    for (VertexId v : group)
        if (!h.has_vertex(v)) throw std::invalid_argument("contract_set: vertex not in hypergraph");
    std::set<VertexId> g(group.begin(), group.end());
    VertexId fresh = h.next_fresh();
    std::vector<VertexId> verts;
    for (VertexId v : h.vertices())
        if (!g.count(v)) verts.push_back(v);
    verts.push_back(fresh);
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : h.edges()) {
        std::vector<VertexId> ne;
        bool met = false;
        for (VertexId v : e) {
            if (g.count(v))
                met = true;
            else
                ne.push_back(v);
        }
        if (met) ne.push_back(fresh);
        edges.push_back(std::move(ne));
    }
    return Hypergraph::internal(std::move(verts), std::move(edges), fresh + 1);
}

/// (H - e) with the vertices of e identified.
inline Hypergraph contract_edge(const Hypergraph& h, std::size_t e) {
    if (e >= h.edge_count()) throw std::out_of_range("contract_edge: edge index out of range");
    std::vector<VertexId> verts = h.edge(e);
    return contract_set(delete_edge(h, e), verts);
}

struct JoinResult {
    Hypergraph joined;
    std::vector<VertexId> apex;  // the p fresh clique vertices, ascending
};

/// H joined with a p-clique of fresh vertices: every fresh vertex is linked
/// to every vertex of H and to every other fresh vertex by 2-edges.
inline JoinResult join_clique(const Hypergraph& h, int p) {
    if (p < 1) throw std::invalid_argument("join_clique: p must be >= 1");
    std::vector<VertexId> apex;
    for (int i = 0; i < p; ++i) apex.push_back(h.next_fresh() + i);
    std::vector<VertexId> verts = h.vertices();
    verts.insert(verts.end(), apex.begin(), apex.end());
    std::vector<std::vector<VertexId>> edges = h.edges();
    for (VertexId w : apex)
        for (VertexId v : h.vertices()) edges.push_back({v, w});
    for (std::size_t i = 0; i < apex.size(); ++i)
        for (std::size_t j = i + 1; j < apex.size(); ++j) edges.push_back({apex[i], apex[j]});
    return {Hypergraph::internal(std::move(verts), std::move(edges), h.next_fresh() + p), apex};
}

/// Explicit cycle certificate: p distinct vertices and p distinct edges with
/// {vertex[i-1], vertex[i]} inside edge[i], indices modulo p; p >= 2.
struct CycleWitness {
    std::vector<VertexId> vertex_seq;
    std::vector<std::size_t> edge_seq;
    std::size_t length() const { return vertex_seq.size(); }
};

inline bool is_valid_cycle(const Hypergraph& h, const CycleWitness& w) {
    std::size_t p = w.vertex_seq.size();
    if (p < 2 || w.edge_seq.size() != p) return false;
    std::set<VertexId> vs(w.vertex_seq.begin(), w.vertex_seq.end());
    std::set<std::size_t> es(w.edge_seq.begin(), w.edge_seq.end());
    if (vs.size() != p || es.size() != p) return false;
    for (std::size_t i = 0; i < p; ++i) {
        if (w.edge_seq[i] >= h.edge_count()) return false;
        const auto& e = h.edge(w.edge_seq[i]);
        VertexId a = w.vertex_seq[(i + p - 1) % p];
        VertexId b = w.vertex_seq[i];
        if (!std::binary_search(e.begin(), e.end(), a)) return false;
        if (!std::binary_search(e.begin(), e.end(), b)) return false;
    }
    return true;
}

struct EdgeGirth {
    std::optional<int> length;  // nullopt when no cycle contains the edge
    std::optional<CycleWitness> witness;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<std::size_t>> inc(h.vertex_count());
    for (std::size_t ei = 0; ei < h.edge_count(); ++ei)
        for (VertexId v : h.edge(ei)) inc[h.vertex_index(v)].push_back(ei);
    return inc;
}

}  // namespace detail

/// Length of a shortest cycle through edge e: 1 + min over distinct u,v in e
/// of the edge-distance between u and v in H - e. A shortest alternating walk
/// repeats no vertex and no edge, so the closed walk is a valid cycle and a
/// witness of that length is returned.
inline EdgeGirth girth_of_edge(const Hypergraph& h, std::size_t e) {
    const auto& base = h.edge(e);
    if (base.size() < 2) throw std::invalid_argument("girth_of_edge: degenerate edge");
    Hypergraph rest = delete_edge(h, e);
    auto inc = detail::incidence_lists(rest);
    int best = -1;
    std::vector<VertexId> best_path;
    std::vector<std::size_t> best_edges;
    for (VertexId source : base) {
        // BFS in H - e, distance counted in edges
        std::vector<int> dist(rest.vertex_count(), -1);
        std::vector<VertexId> prev_vertex(rest.vertex_count(), -1);
        std::vector<std::size_t> prev_edge(rest.vertex_count(), 0);
        std::vector<std::size_t> queue;
        std::size_t s = rest.vertex_index(source);
        dist[s] = 0;
        queue.push_back(s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t u = queue[qi];
            for (std::size_t ei : inc[u]) {
                for (VertexId wv : rest.edge(ei)) {
                    std::size_t w = rest.vertex_index(wv);
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        prev_vertex[w] = rest.vertices()[u];
                        prev_edge[w] = ei;
                        queue.push_back(w);
                    }
                }
            }
        }
        for (VertexId target : base) {
            if (target == source) continue;
            std::size_t t = rest.vertex_index(target);
            if (dist[t] == -1) continue;
            int len = 1 + dist[t];
            if (best != -1 && len >= best) continue;
            best = len;
            // reconstruct source -> target path
            std::vector<VertexId> path;
            std::vector<std::size_t> path_edges;
            VertexId cur = target;
            while (cur != source) {
                std::size_t ci = rest.vertex_index(cur);
                path.push_back(cur);
                path_edges.push_back(prev_edge[ci]);
                cur = prev_vertex[ci];
            }
            path.push_back(source);
            std::reverse(path.begin(), path.end());
            std::reverse(path_edges.begin(), path_edges.end());
            best_path = std::move(path);
            best_edges = std::move(path_edges);
        }
    }
    if (best == -1) return {};
    // Map path edges (indices in H - e) back to indices in H: edges above e shift by one.
    CycleWitness w;
    w.vertex_seq = best_path;
    w.edge_seq.push_back(e);  // closing edge contains both endpoints of the path
    for (std::size_t ei : best_edges) w.edge_seq.push_back(ei < e ? ei : ei + 1);
    return {best, std::move(w)};
}

/// Minimum of girth_of_edge over all non-degenerate edges; nullopt if acyclic.
inline std::optional<int> girth(const Hypergraph& h) {
    std::optional<int> best;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (h.edge(e).size() < 2) continue;
        EdgeGirth g = girth_of_edge(h, e);
        if (g.length && (!best || *g.length < *best)) best = g.length;
    }
    return best;
}

namespace detail {

/// Whether the edge set (given by indices) can be arranged into a single
/// cycle using every edge exactly once: some cyclic order of the edges admits
/// distinct representative vertices v_i in edge_i with v_i also in edge_{i+1}.
inline bool edge_set_is_cycle(const Hypergraph& h, const std::vector<std::size_t>& edge_set) {
    std::size_t z = edge_set.size();
    if (z < 2) return false;
    std::vector<std::size_t> order(edge_set.begin() + 1, edge_set.end());
    std::sort(order.begin(), order.end());
    do {
        std::vector<std::size_t> cyc;
        cyc.push_back(edge_set[0]);
        cyc.insert(cyc.end(), order.begin(), order.end());
        // pick distinct v_i in edge cyc[i] ∩ edge cyc[(i+1) % z]
        std::vector<VertexId> chosen;
        std::set<VertexId> used;
        auto assign = [&](auto&& self, std::size_t i) -> bool {
            if (i == z) return true;
            const auto& a = h.edge(cyc[i]);
            const auto& b = h.edge(cyc[(i + 1) % z]);
            for (VertexId v : a) {
                if (!std::binary_search(b.begin(), b.end(), v)) continue;
                if (used.count(v)) continue;
                used.insert(v);
                chosen.push_back(v);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
                used.erase(v);
            }
            return false;
        };
        if (assign(assign, 0)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace detail

struct CycleCensus {
    int length = 0;                                    // z = girth
    long long count = 0;                               // number of cycle edge sets of size z
    std::vector<std::vector<std::size_t>> witnesses;   // those edge sets (sorted indices)
};

/// Counts edge subsets S with |S| = girth that form a cycle using all of S.
inline CycleCensus shortest_cycle_census(const Hypergraph& h,
                                         unsigned long long subset_budget = 10'000'000ULL) {
    std::optional<int> z = girth(h);
    if (!z) throw std::invalid_argument("shortest_cycle_census: acyclic hypergraph");
    std::size_t m = h.edge_count();
    std::size_t k = static_cast<std::size_t>(*z);
    // C(m, z) subsets
    unsigned long long total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total = total * (m - i) / (i + 1);
        if (total > subset_budget)
            throw std::runtime_error("shortest_cycle_census: subset budget exceeded");
    }
    CycleCensus census;
    census.length = *z;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        if (detail::edge_set_is_cycle(h, pick)) {
            ++census.count;
            census.witnesses.push_back(pick);
        }
        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] != i + m - k) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return census;
        }
        if (k == 0) return census;
    }
}

/// Smallest d such that some vertex ordering gives every vertex at most d-1
/// earlier neighbors in the 2-section; computed as 2-section degeneracy + 1
/// by repeated minimum-degree removal.
inline int coloring_number(const Hypergraph& h) {
    std::size_t n = h.vertex_count();
    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                adj[h.vertex_index(e[i])].insert(h.vertex_index(e[j]));
                adj[h.vertex_index(e[j])].insert(h.vertex_index(e[i]));
            }
    std::vector<bool> removed(n, false);
    int degeneracy = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (removed[v]) continue;
            std::size_t deg = 0;
            for (std::size_t u : adj[v])
                if (!removed[u]) ++deg;
            if (pick == n || deg < best_deg) {
                pick = v;
                best_deg = deg;
            }
        }
        degeneracy = std::max(degeneracy, static_cast<int>(best_deg));
        removed[pick] = true;
    }
    return degeneracy + 1;
}

struct Classification {
    bool linear = true;                 // all pairwise edge intersections of size <= 1
    std::optional<int> uniform_rank;    // r when every edge has size r
};

inline Classification classify(const Hypergraph& h) {
    Classification c;
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size() && c.linear; ++i)
        for (std::size_t j = i + 1; j < edges.size() && c.linear; ++j) {
            std::size_t common = 0;
            for (VertexId v : edges[i])
                if (std::binary_search(edges[j].begin(), edges[j].end(), v)) ++common;
            if (common > 1) c.linear = false;
        }
    if (!edges.empty()) {
        std::size_t r = edges[0].size();
        bool uniform = std::all_of(edges.begin(), edges.end(),
                                   [&](const auto& e) { return e.size() == r; });
        if (uniform) c.uniform_rank = static_cast<int>(r);
    }
    return c;
}

}  // namespace hyperchroma
