#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperchroma/chromatic.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/rational.hpp"

namespace hyperchroma {

/// A partial map: colors for exactly the vertices of one edge, aligned to the
/// edge's sorted vertex order. Colors are 1-based in [1..k].
struct PartialMap {
    std::size_t edge = 0;
    std::vector<int> colors;
};

/// A k-fold cover: for each edge, a family of at most k partial maps that
/// pairwise disagree at every vertex of the edge.
struct Cover {
    int k = 0;
    std::vector<std::vector<PartialMap>> per_edge;

    bool perfect() const {
        for (const auto& fam : per_edge)
            if (fam.size() != static_cast<std::size_t>(k)) return false;
        return true;
    }
    std::size_t map_count() const {
        std::size_t c = 0;
        for (const auto& fam : per_edge) c += fam.size();
        return c;
    }
};

struct CoverViolation {
    std::string message;
    std::size_t edge = 0;
    std::size_t map_a = 0;
    std::size_t map_b = 0;
};

inline std::optional<CoverViolation> validate_cover(const Hypergraph& h, const Cover& f) {
    if (f.k < 1) return CoverViolation{"k must be >= 1"};
    if (f.per_edge.size() != h.edge_count())
        return CoverViolation{"cover must list one family per edge"};
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& fam = f.per_edge[e];
        if (fam.size() > static_cast<std::size_t>(f.k))
            return CoverViolation{"more than k maps on one edge", e};
        for (std::size_t a = 0; a < fam.size(); ++a) {
            if (fam[a].edge != e) return CoverViolation{"map filed under wrong edge", e, a};
            if (fam[a].colors.size() != h.edge(e).size())
                return CoverViolation{"map domain does not equal its edge", e, a};
            for (int c : fam[a].colors)
                if (c < 1 || c > f.k) return CoverViolation{"color out of range", e, a};
        }
        for (std::size_t a = 0; a < fam.size(); ++a)
            for (std::size_t b = a + 1; b < fam.size(); ++b)
                for (std::size_t pos = 0; pos < fam[a].colors.size(); ++pos)
                    if (fam[a].colors[pos] == fam[b].colors[pos])
                        return CoverViolation{"two maps agree at vertex position " +
                                                  std::to_string(pos),
                                              e, a, b};
    }
    return std::nullopt;
}

/// Per edge, the k constant maps. Its coloring count equals P(H, k).
inline Cover natural_cover(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("natural_cover: k must be >= 1");
    Cover f;
    f.k = k;
    f.per_edge.resize(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (int i = 1; i <= k; ++i)
            f.per_edge[e].push_back({e, std::vector<int>(h.edge(e).size(), i)});
    return f;
}

/// Normal form for perfect covers: per edge, row i gets color i at the anchor
/// (the edge's first vertex in sorted order) and sigma[pos](i) at position
/// pos. Every column of a perfect family lists k distinct colors, so it is a
/// permutation, and rows can be reordered to pin the anchor column to the
/// identity: every perfect cover is reachable in this form.
struct PermCoverSpec {
    int k = 0;
    // perms[edge][pos] is a permutation of 1..k; perms[edge][0] is always the identity
    std::vector<std::vector<std::vector<int>>> perms;

    static PermCoverSpec identity(const Hypergraph& h, int k) {
        PermCoverSpec s;
        s.k = k;
        std::vector<int> id(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i)] = i + 1;
        s.perms.resize(h.edge_count());
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            s.perms[e].assign(h.edge(e).size(), id);
        return s;
    }
};

/// Cyclic sub-family of PermCoverSpec: sigma[pos](i) = i + shift (mod k).
struct ShiftSpec {
    int k = 0;
    std::vector<std::vector<int>> shifts;  // shifts[edge][pos]; position 0 kept at 0

    static ShiftSpec zero(const Hypergraph& h, int k) {
        ShiftSpec s;
        s.k = k;
        s.shifts.resize(h.edge_count());
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            s.shifts[e].assign(h.edge(e).size(), 0);
        return s;
    }
};

inline PermCoverSpec to_perm_spec(const Hypergraph& h, const ShiftSpec& s) {
    PermCoverSpec p = PermCoverSpec::identity(h, s.k);
    if (s.shifts.size() != h.edge_count())
        throw std::invalid_argument("ShiftSpec: one shift list per edge required");
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (s.shifts[e].size() != h.edge(e).size())
            throw std::invalid_argument("ShiftSpec: one shift per edge vertex required");
        for (std::size_t pos = 0; pos < s.shifts[e].size(); ++pos) {
            int shift = ((s.shifts[e][pos] % s.k) + s.k) % s.k;
            for (int i = 0; i < s.k; ++i)
                p.perms[e][pos][static_cast<std::size_t>(i)] = (i + shift) % s.k + 1;
        }
    }
    return p;
}

/// Whether every permutation in the spec is a cyclic shift i -> i + s (mod k);
/// identifies witnesses that lie in the ShiftSpec sub-family.
inline bool is_shift_spec(const PermCoverSpec& spec) {
    for (const auto& edge_perms : spec.perms)
        for (const auto& perm : edge_perms) {
            if (perm.empty()) return false;
            int k = static_cast<int>(perm.size());
            int shift = perm[0] - 1;
            for (int i = 0; i < k; ++i)
                if (perm[static_cast<std::size_t>(i)] != (i + shift) % k + 1) return false;
        }
    return true;
}

inline Cover expand_spec(const Hypergraph& h, const PermCoverSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("expand_spec: k must be >= 1");
    if (spec.perms.size() != h.edge_count())
        throw std::invalid_argument("expand_spec: one permutation list per edge required");
    Cover f;
    f.k = spec.k;
    f.per_edge.resize(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (spec.perms[e].size() != h.edge(e).size())
            throw std::invalid_argument("expand_spec: one permutation per edge vertex required");
        for (const auto& perm : spec.perms[e]) {
            if (perm.size() != static_cast<std::size_t>(spec.k))
                throw std::invalid_argument("expand_spec: permutation of wrong size");
            std::vector<bool> hit(static_cast<std::size_t>(spec.k), false);
            for (int c : perm) {
                if (c < 1 || c > spec.k || hit[static_cast<std::size_t>(c - 1)])
                    throw std::invalid_argument("expand_spec: not a permutation of 1..k");
                hit[static_cast<std::size_t>(c - 1)] = true;
            }
        }
        for (int i = 0; i < spec.k; ++i) {
            PartialMap pm;
            pm.edge = e;
            for (std::size_t pos = 0; pos < h.edge(e).size(); ++pos)
                pm.colors.push_back(spec.perms[e][pos][static_cast<std::size_t>(i)]);
            f.per_edge[e].push_back(std::move(pm));
        }
    }
    return f;
}

/// Greedily adds partial maps to every deficient edge family until the cover
/// is perfect. Each added map takes, per position, the smallest color unused
/// at that position, so it disagrees with every existing map everywhere.
inline Cover saturate(const Hypergraph& h, Cover f) {
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto& fam = f.per_edge[e];
        while (fam.size() < static_cast<std::size_t>(f.k)) {
            PartialMap pm;
            pm.edge = e;
            for (std::size_t pos = 0; pos < h.edge(e).size(); ++pos) {
                std::vector<bool> used(static_cast<std::size_t>(f.k) + 1, false);
                for (const auto& m : fam) used[static_cast<std::size_t>(m.colors[pos])] = true;
                int pick = 1;
                while (used[static_cast<std::size_t>(pick)]) ++pick;
                pm.colors.push_back(pick);
            }
            fam.push_back(std::move(pm));
        }
    }
    return f;
}

/// Independent per-vertex recoloring; transforms colorings bijectively, so
/// every coloring count is preserved.
inline Cover apply_vertex_gauge(const Hypergraph& h, Cover f,
                                const std::vector<std::vector<int>>& gauge) {
    if (gauge.size() != h.vertex_count())
        throw std::invalid_argument("apply_vertex_gauge: one bijection per vertex required");
    for (const auto& g : gauge) {
        if (g.size() != static_cast<std::size_t>(f.k))
            throw std::invalid_argument("apply_vertex_gauge: bijection of wrong size");
        std::vector<bool> hit(static_cast<std::size_t>(f.k), false);
        for (int c : g) {
            if (c < 1 || c > f.k || hit[static_cast<std::size_t>(c - 1)])
                throw std::invalid_argument("apply_vertex_gauge: not a bijection of 1..k");
            hit[static_cast<std::size_t>(c - 1)] = true;
        }
    }
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& verts = h.edge(e);
        for (auto& m : f.per_edge[e])
            for (std::size_t pos = 0; pos < verts.size(); ++pos) {
                std::size_t vi = h.vertex_index(verts[pos]);
                m.colors[pos] = gauge[vi][static_cast<std::size_t>(m.colors[pos] - 1)];
            }
    }
    return f;
}

namespace detail {

template <typename Result, typename ChunkFn, typename CombineFn>
Result parallel_reduce(std::uint64_t total, int threads, Result init, ChunkFn chunk,
                       CombineFn combine) {
    if (threads <= 1 || total < 1024) return combine(init, chunk(0, total));
    std::uint64_t want = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
    std::vector<Result> partial(want, init);
    std::vector<std::thread> pool;
    for (std::uint64_t t = 0; t < want; ++t) {
        std::uint64_t lo = total * t / want;
        std::uint64_t hi = total * (t + 1) / want;
        pool.emplace_back([&partial, t, lo, hi, &chunk] { partial[t] = chunk(lo, hi); });
    }
    for (auto& th : pool) th.join();
    Result out = init;
    for (const Result& p : partial) out = combine(out, p);
    return out;
}

struct CoverKernel {
    std::size_t n = 0;
    int k = 0;
    // per map: vertex indices and colors, flattened
    std::vector<std::vector<std::size_t>> map_vertex;
    std::vector<std::vector<int>> map_color;

    CoverKernel(const Hypergraph& h, const Cover& f) : n(h.vertex_count()), k(f.k) {
        for (std::size_t e = 0; e < f.per_edge.size(); ++e) {
            std::vector<std::size_t> ids;
            for (VertexId v : h.edge(e)) ids.push_back(h.vertex_index(v));
            for (const auto& m : f.per_edge[e]) {
                map_vertex.push_back(ids);
                map_color.push_back(m.colors);
            }
        }
    }

    /// Counts avoiding assignments over a contiguous index range; assignment
    /// index is read in base k, one digit per vertex.
    std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi) const {
        std::vector<int> color(n, 1);
        std::uint64_t rest = lo;
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = static_cast<int>(rest % static_cast<std::uint64_t>(k)) + 1;
            rest /= static_cast<std::uint64_t>(k);
        }
        std::uint64_t count = 0;
        for (std::uint64_t step = lo; step < hi; ++step) {
            bool avoided_all = true;
            for (std::size_t m = 0; m < map_vertex.size(); ++m) {
                bool extends = true;
                const auto& ids = map_vertex[m];
                const auto& cols = map_color[m];
                for (std::size_t j = 0; j < ids.size(); ++j)
                    if (color[ids[j]] != cols[j]) {
                        extends = false;
                        break;
                    }
                if (extends) {
                    avoided_all = false;
                    break;
                }
            }
            if (avoided_all) ++count;
            for (std::size_t v = 0; v < n; ++v) {
                if (++color[v] <= k) break;
                color[v] = 1;
            }
        }
        return count;
    }
};

inline std::uint64_t assignment_count_checked(std::size_t n, int k, std::uint64_t budget,
                                              const char* who) {
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<unsigned>(k);
        if (total > budget) throw BudgetExceeded(std::string(who) + ": assignment budget exceeded");
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace detail

/// Number of full maps V -> [k] avoiding every partial map in the cover (each
/// map must differ from the assignment somewhere on its edge).
inline std::uint64_t count_colorings_brute(const Hypergraph& h, const Cover& f,
                                           std::uint64_t assignment_budget = 100'000'000ULL,
                                           int threads = 1) {
    if (auto bad = validate_cover(h, f))
        throw std::invalid_argument("count_colorings_brute: invalid cover: " + bad->message);
    std::uint64_t total =
        detail::assignment_count_checked(h.vertex_count(), f.k, assignment_budget,
                                         "count_colorings_brute");
    detail::CoverKernel kernel(h, f);
    return detail::parallel_reduce<std::uint64_t>(
        total, threads, 0,
        [&kernel](std::uint64_t lo, std::uint64_t hi) { return kernel.count_range(lo, hi); },
        [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

/// Same count by inclusion–exclusion over compatible subsets of the cover's
/// maps: sum of (-1)^|A| k^(n - pinned(A)) over subsets A whose union is a
/// single-valued partial assignment. Independent oracle for the brute count.
inline std::uint64_t count_colorings_ie(const Hypergraph& h, const Cover& f,
                                        std::uint64_t node_budget = 50'000'000ULL,
                                        std::uint64_t assignment_budget = 100'000'000ULL) {
    if (auto bad = validate_cover(h, f))
        throw std::invalid_argument("count_colorings_ie: invalid cover: " + bad->message);
    // keeps every partial sum within int64: |acc| <= nodes * k^n
    detail::assignment_count_checked(h.vertex_count(), f.k, assignment_budget,
                                     "count_colorings_ie");
    std::vector<std::vector<std::size_t>> map_vertex;
    std::vector<std::vector<int>> map_color;
    for (std::size_t e = 0; e < f.per_edge.size(); ++e) {
        std::vector<std::size_t> ids;
        for (VertexId v : h.edge(e)) ids.push_back(h.vertex_index(v));
        for (const auto& m : f.per_edge[e]) {
            map_vertex.push_back(ids);
            map_color.push_back(m.colors);
        }
    }
    std::size_t n = h.vertex_count();
    std::vector<BigInt> kpow(n + 1, BigInt(1));
    for (std::size_t i = 1; i <= n; ++i) kpow[i] = kpow[i - 1] * BigInt(f.k);
    std::vector<int> pinned(n, 0);  // 0 = free, else pinned color
    long long acc = 0;
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t idx, std::size_t pinned_count, bool odd) -> void {
        if (++nodes > node_budget) throw BudgetExceeded("count_colorings_ie: node budget exceeded");
        if (idx == map_vertex.size()) {
            long long v = kpow[n - pinned_count].to_int64();
            acc += odd ? -v : v;
            return;
        }
        self(self, idx + 1, pinned_count, odd);  // exclude map idx
        const auto& ids = map_vertex[idx];
        const auto& cols = map_color[idx];
        std::vector<std::size_t> undo;
        bool compatible = true;
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (pinned[ids[j]] == 0) {
                pinned[ids[j]] = cols[j];
                undo.push_back(ids[j]);
            } else if (pinned[ids[j]] != cols[j]) {
                compatible = false;
                break;
            }
        }
        if (compatible) self(self, idx + 1, pinned_count + undo.size(), !odd);
        for (std::size_t u : undo) pinned[u] = 0;
    };
    dfs(dfs, 0, 0, false);
    if (acc < 0) throw std::logic_error("count_colorings_ie: negative total");
    return static_cast<std::uint64_t>(acc);
}

struct DpOptions {
    std::uint64_t cover_budget = 2'000'000ULL;
    std::uint64_t assignment_budget = 100'000'000ULL;
    int threads = 1;
    bool gauge_prune = true;
};

struct DpSearchResult {
    bool exact = false;            // whole family enumerated within budget
    std::uint64_t value = 0;       // minimum count found
    PermCoverSpec witness;         // a spec attaining it (lowest index on ties)
    std::uint64_t covers_tried = 0;
    BigInt covers_total;
};

namespace detail {

/// Free permutation slots of the normalized search. Unpruned: every
/// non-anchor position. Pruned: only non-anchor positions whose vertex was
/// already seen by an earlier edge — first-visited columns can be pinned to
/// the identity by a per-vertex recoloring plus per-edge row relabeling, and
/// that transformation preserves counts, so the restricted family still
/// attains the minimum.
inline std::vector<std::pair<std::size_t, std::size_t>> dp_slots(const Hypergraph& h,
                                                                 bool prune) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::set<VertexId> seen;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& verts = h.edge(e);
        for (std::size_t pos = 1; pos < verts.size(); ++pos)
            if (!prune || seen.count(verts[pos])) slots.emplace_back(e, pos);
        seen.insert(verts.begin(), verts.end());
    }
    return slots;
}

inline std::vector<std::vector<int>> permutations_lex(int k) {
    std::vector<int> id(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) id[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> all;
    do {
        all.push_back(id);
    } while (std::next_permutation(id.begin(), id.end()));
    return all;
}

inline PermCoverSpec spec_from_index(const Hypergraph& h, int k,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                                     const std::vector<std::vector<int>>& perms,
                                     std::uint64_t index) {
    PermCoverSpec spec = PermCoverSpec::identity(h, k);
    std::uint64_t fact = perms.size();
    for (std::size_t s = slots.size(); s-- > 0;) {
        spec.perms[slots[s].first][slots[s].second] = perms[index % fact];
        index /= fact;
    }
    return spec;
}

}  // namespace detail

/// Exact DP color function value: minimum coloring count over all perfect
/// covers in normal form (restriction to perfect covers is sound because
/// saturation never increases the count). Exceeding the cover budget yields
/// an inexact result carrying the best upper bound found.
inline DpSearchResult dp_exact(const Hypergraph& h, int k, const DpOptions& opts = {}) {
    if (k < 1) throw std::invalid_argument("dp_exact: k must be >= 1");
    detail::assignment_count_checked(h.vertex_count(), k, opts.assignment_budget, "dp_exact");
    auto slots = detail::dp_slots(h, opts.gauge_prune);
    auto perms = detail::permutations_lex(k);
    BigInt total = BigInt::pow(BigInt(static_cast<long long>(perms.size())),
                               static_cast<unsigned long long>(slots.size()));
    DpSearchResult res;
    res.covers_total = total;
    res.exact = total <= BigInt(static_cast<long long>(opts.cover_budget));
    std::uint64_t tried = res.exact ? static_cast<std::uint64_t>(total.to_int64())
                                    : opts.cover_budget;
    res.covers_tried = tried;
    using Best = std::pair<std::uint64_t, std::uint64_t>;  // (count, index)
    Best init{UINT64_MAX, UINT64_MAX};
    Best best = detail::parallel_reduce<Best>(
        tried, opts.threads, init,
        [&](std::uint64_t lo, std::uint64_t hi) {
            Best local{UINT64_MAX, UINT64_MAX};
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                PermCoverSpec spec = detail::spec_from_index(h, k, slots, perms, idx);
                Cover f = expand_spec(h, spec);
                std::uint64_t c = count_colorings_brute(h, f, opts.assignment_budget, 1);
                if (c < local.first) local = {c, idx};
            }
            return local;
        },
        [](const Best& a, const Best& b) { return std::min(a, b); });
    if (best.first == UINT64_MAX) {  // no cover tried: slot-free instance
        best = {count_colorings_brute(h, expand_spec(h, PermCoverSpec::identity(h, k)),
                                      opts.assignment_budget, 1),
                0};
    }
    res.value = best.first;
    res.witness = detail::spec_from_index(h, k, slots, perms, best.second);
    return res;
}

enum class UpperStrategy { shifts, random_perms };

struct UpperSearchResult {
    std::uint64_t value = 0;
    PermCoverSpec witness;
    std::uint64_t tried = 0;
    bool family_exhausted = false;
};

namespace detail {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

}  // namespace detail

/// Minimum count over a parametrized cover family within budget. The family
/// includes the all-zero shifts (the natural cover), so the result is always
/// an upper bound on P_DP(H, k) that is at most P(H, k).
inline UpperSearchResult dp_upper_search(const Hypergraph& h, int k, UpperStrategy strategy,
                                         std::uint64_t trial_budget = 4096,
                                         std::uint64_t seed = 1,
                                         std::uint64_t assignment_budget = 100'000'000ULL,
                                         int threads = 1) {
    if (k < 1) throw std::invalid_argument("dp_upper_search: k must be >= 1");
    detail::assignment_count_checked(h.vertex_count(), k, assignment_budget, "dp_upper_search");
    std::vector<std::pair<std::size_t, std::size_t>> slots = detail::dp_slots(h, false);
    std::uint64_t total_trials = trial_budget;
    bool exhausted = false;
    if (strategy == UpperStrategy::shifts) {
        unsigned __int128 family = 1;
        for (std::size_t s = 0; s < slots.size() && family <= trial_budget; ++s)
            family *= static_cast<unsigned>(k);
        if (family <= trial_budget) {
            total_trials = static_cast<std::uint64_t>(family);
            exhausted = true;
        }
    }
    auto spec_for_trial = [&](std::uint64_t trial) -> PermCoverSpec {
        if (strategy == UpperStrategy::shifts) {
            ShiftSpec s = ShiftSpec::zero(h, k);
            std::uint64_t idx = trial;
            for (const auto& [e, pos] : slots) {
                s.shifts[e][pos] = static_cast<int>(idx % static_cast<std::uint64_t>(k));
                idx /= static_cast<std::uint64_t>(k);
            }
            return to_perm_spec(h, s);
        }
        PermCoverSpec spec = PermCoverSpec::identity(h, k);
        if (trial == 0) return spec;  // keep the natural cover in the family
        detail::SplitMix64 rng(seed * 0x100000001B3ULL + trial);
        for (const auto& [e, pos] : slots) {
            auto& perm = spec.perms[e][pos];
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[rng.next() % i]);
        }
        return spec;
    };
    using Best = std::pair<std::uint64_t, std::uint64_t>;
    Best best = detail::parallel_reduce<Best>(
        total_trials, threads, Best{UINT64_MAX, UINT64_MAX},
        [&](std::uint64_t lo, std::uint64_t hi) {
            Best local{UINT64_MAX, UINT64_MAX};
            for (std::uint64_t t = lo; t < hi; ++t) {
                Cover f = expand_spec(h, spec_for_trial(t));
                std::uint64_t c = count_colorings_brute(h, f, assignment_budget, 1);
                if (c < local.first) local = {c, t};
            }
            return local;
        },
        [](const Best& a, const Best& b) { return std::min(a, b); });
    if (best.first == UINT64_MAX)
        best = {count_colorings_brute(h, expand_spec(h, PermCoverSpec::identity(h, k)),
                                      assignment_budget, 1),
                0};
    UpperSearchResult res;
    res.value = best.first;
    res.witness = spec_for_trial(best.second);
    res.tried = total_trials;
    res.family_exhausted = exhausted;
    return res;
}

/// Closed-form upper bound on P_DP for an r-uniform hypergraph:
/// k^(n-(r-1)m) (k^(r-1) - 1)^m. Exact rational (integral whenever the
/// exponent of k is nonnegative).
inline ExactRational uniform_upper_bound(const Hypergraph& h, long long k) {
    Classification cls = classify(h);
    if (!cls.uniform_rank || h.edge_count() == 0)
        throw std::invalid_argument("uniform_upper_bound: hypergraph must be uniform with m >= 1");
    long long r = *cls.uniform_rank;
    long long n = static_cast<long long>(h.vertex_count());
    long long m = static_cast<long long>(h.edge_count());
    long long a = n - (r - 1) * m;
#ifdef HYPERCHROMA_FAULT_UNIFORM_BOUND
    a += 1;  // fault-injection build: deliberately wrong exponent, used to test audit sensitivity
#endif
    BigInt factor = BigInt::pow(BigInt::pow(BigInt(k), static_cast<unsigned long long>(r - 1)) -
                                    BigInt(1),
                                static_cast<unsigned long long>(m));
    if (a >= 0)
        return ExactRational(BigInt::pow(BigInt(k), static_cast<unsigned long long>(a)) * factor);
    return ExactRational(factor, BigInt::pow(BigInt(k), static_cast<unsigned long long>(-a)));
}

/// Same bound as a polynomial pair: bound(k) = num(k) / k^k_shift.
struct UniformBoundPoly {
    IntPolynomial num;
    int k_shift = 0;
};

inline UniformBoundPoly uniform_upper_bound_poly(const Hypergraph& h) {
    Classification cls = classify(h);
    if (!cls.uniform_rank || h.edge_count() == 0)
        throw std::invalid_argument("uniform_upper_bound_poly: hypergraph must be uniform with m >= 1");
    int r = *cls.uniform_rank;
    long long n = static_cast<long long>(h.vertex_count());
    long long m = static_cast<long long>(h.edge_count());
    long long a = n - static_cast<long long>(r - 1) * m;
#ifdef HYPERCHROMA_FAULT_UNIFORM_BOUND
    a += 1;
#endif
    IntPolynomial factor =
        (IntPolynomial::monomial(BigInt(1), r - 1) - IntPolynomial::constant(BigInt(1)))
            .pow(static_cast<unsigned>(m));
    UniformBoundPoly out;
    if (a >= 0) {
        out.num = IntPolynomial::monomial(BigInt(1), static_cast<int>(a)) * factor;
        out.k_shift = 0;
    } else {
        out.num = factor;
        out.k_shift = static_cast<int>(-a);
    }
    return out;
}

/// Exact value attained by the constructive cover family available at an edge
/// e whose removal splits H into |e| - 1 components:
///   min{ P(H,k), ((k^{n_e-1}-1) P(H-e,k) - k^{n_e-2} P(H,k)) / (k^{n_e-2}(k-1)) }.
struct SplitEdgeBound {
    ExactRational value;
    int attained_branch = 1;  // 1 = P(H,k); 2 = the quotient expression
    ExactRational branch2;
    BigInt p_full;
    BigInt p_minus;
};

inline SplitEdgeBound split_edge_bound(const Hypergraph& h, std::size_t e, long long k,
                                       ChromaticCache* cache = nullptr) {
    std::size_t ne = h.edge(e).size();
    if (ne < 2) throw std::invalid_argument("split_edge_bound: edge of size < 2");
    if (components(delete_edge(h, e)).count() != ne - 1)
        throw std::invalid_argument("split_edge_bound: H - e must have exactly |e| - 1 components");
    if (k < 2) throw std::invalid_argument("split_edge_bound: k must be >= 2");
    SplitEdgeBound out;
    out.p_full = chromatic_polynomial(h, cache).evaluate(k);
    out.p_minus = chromatic_polynomial(delete_edge(h, e), cache).evaluate(k);
    BigInt kb(k);
    BigInt k_ne1 = BigInt::pow(kb, static_cast<unsigned long long>(ne - 1));
    BigInt k_ne2 = BigInt::pow(kb, static_cast<unsigned long long>(ne - 2));
    BigInt num = (k_ne1 - BigInt(1)) * out.p_minus - k_ne2 * out.p_full;
    BigInt den = k_ne2 * (kb - BigInt(1));
    out.branch2 = ExactRational(num, den);
    ExactRational first{out.p_full};
    if (ExactRational::compare(first, out.branch2) <= 0) {
        out.value = first;
        out.attained_branch = 1;
    } else {
        out.value = out.branch2;
        out.attained_branch = 2;
    }
    return out;
}

}  // namespace hyperchroma
