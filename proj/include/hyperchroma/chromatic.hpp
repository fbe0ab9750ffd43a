#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/polynomial.hpp"

namespace hyperchroma {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Memo table for chromatic polynomials, keyed on the normalized literal
/// representation of the hypergraph (no isomorphism reduction).
class ChromaticCache {
public:
    const IntPolynomial* find(const std::string& key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    void insert(const std::string& key, IntPolynomial value) {
        map_.emplace(key, std::move(value));
    }
    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::string, IntPolynomial>& entries() const { return map_; }

private:
    std::unordered_map<std::string, IntPolynomial> map_;
};

namespace detail {

inline Hypergraph induced_on(const Hypergraph& h, const std::vector<VertexId>& block) {
    std::vector<std::vector<VertexId>> edges;
    for (const auto& e : h.edges())
        if (std::binary_search(block.begin(), block.end(), e[0])) edges.push_back(e);
    return Hypergraph::internal(block, std::move(edges), h.next_fresh());
}

/// Drop every edge that contains another edge: a coloring proper on the
/// subset is proper on the superset, so the superset adds no constraint.
inline std::optional<Hypergraph> without_superset_edges(const Hypergraph& h) {
    std::vector<bool> drop(h.edge_count(), false);
    bool any = false;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (std::size_t j = 0; j < h.edge_count(); ++j) {
            if (i == j || drop[i]) continue;
            const auto& small = h.edge(j);
            const auto& big = h.edge(i);
            if (small.size() >= big.size()) continue;
            bool contained = std::includes(big.begin(), big.end(), small.begin(), small.end());
            if (contained) {
                drop[i] = true;
                any = true;
            }
        }
    if (!any) return std::nullopt;
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (!drop[i]) edges.push_back(h.edge(i));
    return Hypergraph::internal(h.vertices(), std::move(edges), h.next_fresh());
}

/// Deterministic pivot: largest edge first; among those, the edge whose
/// contraction collapses the most neighbors (edges with at most one private
/// vertex); ties resolved by lowest index.
inline std::size_t pick_pivot(const Hypergraph& h) {
    std::size_t best = 0;
    std::size_t best_size = 0;
    std::size_t best_score = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::size_t size = h.edge(i).size();
        std::size_t score = 0;
        for (std::size_t j = 0; j < h.edge_count(); ++j) {
            if (i == j) continue;
            const auto& e = h.edge(i);
            const auto& f = h.edge(j);
            std::size_t outside = 0;
            for (VertexId v : f)
                if (!std::binary_search(e.begin(), e.end(), v)) ++outside;
            if (outside <= 1) ++score;
        }
        if (size > best_size || (size == best_size && score > best_score)) {
            best = i;
            best_size = size;
            best_score = score;
        }
    }
    return best;
}

inline bool is_complete_graph(const Hypergraph& h) {
    std::size_t n = h.vertex_count();
    if (n < 2) return false;
    if (h.edge_count() != n * (n - 1) / 2) return false;
    for (const auto& e : h.edges())
        if (e.size() != 2) return false;
    return true;  // edges are deduplicated, so the count pins completeness
}

inline IntPolynomial chromatic_rec(const Hypergraph& h, ChromaticCache& cache);

inline IntPolynomial chromatic_base(const Hypergraph& h, ChromaticCache& cache) {
    if (h.degenerate()) return IntPolynomial::zero();
    std::size_t n = h.vertex_count();
    if (h.edge_count() == 0) return IntPolynomial::monomial(BigInt(1), static_cast<int>(n));
    ComponentPartition parts = components(h);
    if (parts.count() > 1) {
        IntPolynomial prod = IntPolynomial::constant(BigInt(1));
        for (const auto& block : parts.blocks) prod *= chromatic_rec(induced_on(h, block), cache);
        return prod;
    }
    if (auto reduced = without_superset_edges(h)) return chromatic_rec(*reduced, cache);
    if (h.edge_count() == 1) {
        // k^n minus the k * k^(n-|e|) monochromatic assignments of the edge
        std::size_t r = h.edge(0).size();
        return IntPolynomial::monomial(BigInt(1), static_cast<int>(n)) -
               IntPolynomial::monomial(BigInt(1), static_cast<int>(n - r + 1));
    }
    if (is_complete_graph(h)) return falling_factorial(static_cast<int>(n));
    std::size_t e = pick_pivot(h);
    return chromatic_rec(delete_edge(h, e), cache) - chromatic_rec(contract_edge(h, e), cache);
}

inline IntPolynomial chromatic_rec(const Hypergraph& h, ChromaticCache& cache) {
    std::string key = h.key();
    if (const IntPolynomial* hit = cache.find(key)) return *hit;
    IntPolynomial p = chromatic_base(h, cache);
    cache.insert(key, p);
    return p;
}

}  // namespace detail

/// Chromatic polynomial by deletion–contraction with memoization.
inline IntPolynomial chromatic_polynomial(const Hypergraph& h, ChromaticCache* cache = nullptr) {
    ChromaticCache local;
    return detail::chromatic_rec(h, cache ? *cache : local);
}

/// Chromatic polynomial by the signed sum over all edge subsets S of
/// k^(n - n(S) + c(S)), where n(S) and c(S) are the vertex and component
/// counts of the subhypergraph on the vertices covered by S.
inline IntPolynomial chromatic_subset_expansion(const Hypergraph& h,
                                                std::size_t edge_budget = 20) {
    if (h.edge_count() > edge_budget)
        throw BudgetExceeded("chromatic_subset_expansion: 2^m term budget exceeded");
    if (h.degenerate()) return IntPolynomial::zero();  // size-1 edge: no proper coloring
    std::size_t n = h.vertex_count();
    std::size_t m = h.edge_count();
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    std::vector<std::vector<std::size_t>> edge_vertex_ids(m);
    for (std::size_t i = 0; i < m; ++i)
        for (VertexId v : h.edge(i)) edge_vertex_ids[i].push_back(h.vertex_index(v));
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        detail::Dsu dsu(n);
        std::vector<bool> covered(n, false);
        int edges_used = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1ULL)) continue;
            ++edges_used;
            const auto& ids = edge_vertex_ids[i];
            for (std::size_t j = 0; j < ids.size(); ++j) {
                covered[ids[j]] = true;
                if (j > 0) dsu.unite(ids[0], ids[j]);
            }
        }
        std::size_t covered_count = 0;
        std::vector<std::size_t> roots;
        for (std::size_t v = 0; v < n; ++v) {
            if (!covered[v]) continue;
            ++covered_count;
            roots.push_back(dsu.find(v));
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::size_t power = n - covered_count + roots.size();
        coeffs[power] += (edges_used % 2 == 0) ? BigInt(1) : BigInt(-1);
    }
    return IntPolynomial(std::move(coeffs));
}

/// Counts proper k-colorings by direct enumeration of all k^n assignments.
/// Independent oracle for both polynomial routes.
inline std::uint64_t chromatic_brute_count(const Hypergraph& h, int k,
                                           std::uint64_t assignment_budget = 100'000'000ULL) {
    if (k < 1) throw std::invalid_argument("chromatic_brute_count: k must be >= 1");
    if (h.degenerate()) return 0;
    std::size_t n = h.vertex_count();
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<unsigned>(k);
        if (total > assignment_budget)
            throw BudgetExceeded("chromatic_brute_count: assignment budget exceeded");
    }
    std::vector<std::vector<std::size_t>> edge_ids(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (VertexId v : h.edge(i)) edge_ids[i].push_back(h.vertex_index(v));
    std::vector<int> color(n, 0);
    std::uint64_t count = 0;
    for (std::uint64_t step = 0; step < static_cast<std::uint64_t>(total); ++step) {
        bool proper = true;
        for (const auto& ids : edge_ids) {
            bool mono = true;
            for (std::size_t j = 1; j < ids.size() && mono; ++j)
                if (color[ids[j]] != color[ids[0]]) mono = false;
            if (mono) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        for (std::size_t v = 0; v < n; ++v) {
            if (++color[v] < k) break;
            color[v] = 0;
        }
    }
    return count;
}

/// Exact decomposition of P(H,k) for a connected linear uniform hypergraph of
/// finite girth z with t shortest cycles:
///   P = binomial_part + cycle_term + residual,
/// binomial_part = sum_{i=0}^{z-1} (-1)^i C(m,i) k^{n-i(r-1)},
/// cycle_term    = (-1)^z t k^{n-z(r-1)+1},
/// and the residual has degree at most n - z(r-1).
struct GirthExpansion {
    IntPolynomial binomial_part;
    IntPolynomial cycle_term;
    IntPolynomial residual;
    int z = 0;
    long long t = 0;
    int residual_degree_bound = 0;
    bool degree_bound_holds = false;
};

inline GirthExpansion girth_expansion(const Hypergraph& h, ChromaticCache* cache = nullptr) {
    Classification cls = classify(h);
    if (!cls.linear) throw std::invalid_argument("girth_expansion: hypergraph is not linear");
    if (!cls.uniform_rank) throw std::invalid_argument("girth_expansion: hypergraph is not uniform");
    if (components(h).count() != 1)
        throw std::invalid_argument("girth_expansion: hypergraph is not connected");
    std::optional<int> g = girth(h);
    if (!g) throw std::invalid_argument("girth_expansion: hypergraph is acyclic");
    int r = *cls.uniform_rank;
    int n = static_cast<int>(h.vertex_count());
    long long m = static_cast<long long>(h.edge_count());
    CycleCensus census = shortest_cycle_census(h);
    GirthExpansion ge;
    ge.z = census.length;
    ge.t = census.count;
    for (int i = 0; i < ge.z; ++i) {
        BigInt c = binomial(m, i);
        if (i % 2 == 1) c = -c;
        ge.binomial_part += IntPolynomial::monomial(c, n - i * (r - 1));
    }
    BigInt tc(ge.t);
    if (ge.z % 2 == 1) tc = -tc;
    ge.cycle_term = IntPolynomial::monomial(tc, n - ge.z * (r - 1) + 1);
    IntPolynomial p = chromatic_polynomial(h, cache);
    ge.residual = p - ge.binomial_part - ge.cycle_term;
    ge.residual_degree_bound = n - ge.z * (r - 1);
    ge.degree_bound_holds = ge.residual.degree() <= ge.residual_degree_bound;
    return ge;
}

/// delta(k) = (k^{n_e-1} - 1) P(H-e, k) - k^{n_e-1} P(H, k).
/// delta(k) < 0 at an integer k is exactly the strict comparison
/// P(H-e, k) < k^{n_e-1}/(k^{n_e-1}-1) * P(H, k).
struct EvenCycleDeficit {
    IntPolynomial delta;
    SignThreshold sign;
};

inline EvenCycleDeficit even_cycle_deficit(const Hypergraph& h, std::size_t e,
                                           ChromaticCache* cache = nullptr) {
    std::size_t ne = h.edge(e).size();
    if (ne < 2) throw std::invalid_argument("even_cycle_deficit: edge of size < 2");
    IntPolynomial p_full = chromatic_polynomial(h, cache);
    IntPolynomial p_minus = chromatic_polynomial(delete_edge(h, e), cache);
    IntPolynomial kpow = IntPolynomial::monomial(BigInt(1), static_cast<int>(ne) - 1);
    EvenCycleDeficit d;
    d.delta = (kpow - IntPolynomial::constant(BigInt(1))) * p_minus - kpow * p_full;
    d.sign = sign_threshold(d.delta);
    return d;
}

/// All subsets S of E \ {e} whose spanning subhypergraph leaves v1 and v2 in
/// one component. min_size equals l(e) - 1 exactly when (v1, v2) attains the
/// pair minimum defining l(e); the flag records whether it did.
struct ConnectingFamily {
    std::vector<std::vector<std::size_t>> member_sets;  // sorted edge-index sets
    VertexId v1 = 0, v2 = 0;
    std::optional<std::size_t> min_size;
    bool min_equals_girth_minus_1 = false;
};

inline ConnectingFamily connecting_family(const Hypergraph& h, std::size_t e, VertexId v1,
                                          VertexId v2, std::size_t edge_budget = 22) {
    const auto& base = h.edge(e);
    if (v1 == v2 || !std::binary_search(base.begin(), base.end(), v1) ||
        !std::binary_search(base.begin(), base.end(), v2))
        throw std::invalid_argument("connecting_family: v1, v2 must be distinct vertices of e");
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (i != e) others.push_back(i);
    if (others.size() > edge_budget)
        throw BudgetExceeded("connecting_family: subset budget exceeded");
    ConnectingFamily fam;
    fam.v1 = v1;
    fam.v2 = v2;
    std::size_t i1 = h.vertex_index(v1), i2 = h.vertex_index(v2);
    for (std::uint64_t mask = 0; mask < (1ULL << others.size()); ++mask) {
        detail::Dsu dsu(h.vertex_count());
        std::vector<std::size_t> set;
        for (std::size_t j = 0; j < others.size(); ++j) {
            if (!(mask >> j & 1ULL)) continue;
            set.push_back(others[j]);
            const auto& edge = h.edge(others[j]);
            for (std::size_t t = 1; t < edge.size(); ++t)
                dsu.unite(h.vertex_index(edge[0]), h.vertex_index(edge[t]));
        }
        if (dsu.find(i1) == dsu.find(i2)) {
            if (!fam.min_size || set.size() < *fam.min_size) fam.min_size = set.size();
            fam.member_sets.push_back(std::move(set));
        }
    }
    if (base.size() >= 2) {
        EdgeGirth g = girth_of_edge(h, e);
        if (g.length && fam.min_size)
            fam.min_equals_girth_minus_1 =
                static_cast<int>(*fam.min_size) == *g.length - 1;
    }
    return fam;
}

/// Side-by-side audit of the claimed leading-term identity
///   k^{n_e-1} P(H/e, k) - P(H-e, k)  vs  sum over the connecting family of
///   (-1)^{m(S)} k^{n - n(S) + c(S)}
/// under both readings of n(S), c(S): counted on the covered vertices, and
/// counted on the spanning subhypergraph (all vertices). The identity is
/// reported, never asserted; on some instances neither reading matches.
struct ConnectingFamilyAudit {
    IntPolynomial lhs;
    IntPolynomial rhs_covered;
    IntPolynomial rhs_spanning;
    bool equal_covered = false;
    bool equal_spanning = false;
    bool leading_covered = false;
    bool leading_spanning = false;
    IntPolynomial diff_covered;
    IntPolynomial diff_spanning;
    ConnectingFamily family;
};

inline ConnectingFamilyAudit connecting_family_audit(const Hypergraph& h, std::size_t e,
                                                     VertexId v1, VertexId v2,
                                                     ChromaticCache* cache = nullptr) {
    ConnectingFamilyAudit audit;
    audit.family = connecting_family(h, e, v1, v2);
    std::size_t ne = h.edge(e).size();
    IntPolynomial kpow = IntPolynomial::monomial(BigInt(1), static_cast<int>(ne) - 1);
    audit.lhs = kpow * chromatic_polynomial(contract_edge(h, e), cache) -
                chromatic_polynomial(delete_edge(h, e), cache);
    int n = static_cast<int>(h.vertex_count());
    for (const auto& set : audit.family.member_sets) {
        detail::Dsu dsu(h.vertex_count());
        std::vector<bool> covered(h.vertex_count(), false);
        for (std::size_t ei : set) {
            const auto& edge = h.edge(ei);
            for (std::size_t t = 0; t < edge.size(); ++t) {
                covered[h.vertex_index(edge[t])] = true;
                if (t > 0) dsu.unite(h.vertex_index(edge[0]), h.vertex_index(edge[t]));
            }
        }
        std::vector<std::size_t> roots_covered, roots_all;
        std::size_t covered_count = 0;
        for (std::size_t v = 0; v < h.vertex_count(); ++v) {
            roots_all.push_back(dsu.find(v));
            if (covered[v]) {
                ++covered_count;
                roots_covered.push_back(dsu.find(v));
            }
        }
        auto distinct = [](std::vector<std::size_t>& xs) {
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            return xs.size();
        };
        std::size_t c_cov = distinct(roots_covered);
        std::size_t c_span = distinct(roots_all);
        BigInt sgn = (set.size() % 2 == 0) ? BigInt(1) : BigInt(-1);
        audit.rhs_covered +=
            IntPolynomial::monomial(sgn, n - static_cast<int>(covered_count) + static_cast<int>(c_cov));
        audit.rhs_spanning += IntPolynomial::monomial(sgn, static_cast<int>(c_span));
    }
    auto leading_match = [](const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.degree() == b.degree() && a.leading() == b.leading();
    };
    audit.equal_covered = audit.lhs == audit.rhs_covered;
    audit.equal_spanning = audit.lhs == audit.rhs_spanning;
    audit.leading_covered = leading_match(audit.lhs, audit.rhs_covered);
    audit.leading_spanning = leading_match(audit.lhs, audit.rhs_spanning);
    audit.diff_covered = audit.lhs - audit.rhs_covered;
    audit.diff_spanning = audit.lhs - audit.rhs_spanning;
    return audit;
}

}  // namespace hyperchroma
