#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchroma/chromatic.hpp"
#include "hyperchroma/covers.hpp"
#include "hyperchroma/generators.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/polynomial.hpp"
#include "hyperchroma/serialize.hpp"

namespace hyperchroma {

/// One checked claim on one instance. "verified" means every sub-check passed
/// exactly; "inconclusive" carries a reason ("hypothesis-unmet" when the
/// claim's premises fail on the instance, "budget-exhausted" when a search
/// could not finish, "ambiguous-readings" when differently read forms of a
/// stated bound disagree).
struct VerificationReport {
    std::string claim;     // gir1 | evencyc | prop1p1 | lemma9 | join-identity |
                           // level | lemma2p1 | lemma2p2 | th2p1 | co2p1 | ans3
    std::string instance;
    std::vector<long long> k_values;
    enum class Status { verified, violated, inconclusive } status = Status::inconclusive;
    std::string reason;
    Json payload;
};

inline const char* to_string(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::verified: return "verified";
        case VerificationReport::Status::violated: return "violated";
        default: return "inconclusive";
    }
}

inline Json report_to_json(const VerificationReport& r) {
    Json j;
    j["claim"] = r.claim;
    j["instance"] = r.instance;
    j["k"] = r.k_values;
    j["status"] = to_string(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["payload"] = r.payload;
    return j;
}

inline Json reports_to_json(const std::vector<VerificationReport>& reports) {
    Json j;
    j["schemaVersion"] = 1;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["reports"] = std::move(arr);
    return j;
}

/// Exit status over a report batch: 1 on any violation, else 2 on any
/// inconclusive result that is not a plain unmet hypothesis, else 0.
inline int aggregate_exit(const std::vector<VerificationReport>& reports) {
    bool budget = false;
    for (const auto& r : reports) {
        if (r.status == VerificationReport::Status::violated) return 1;
        if (r.status == VerificationReport::Status::inconclusive && r.reason != "hypothesis-unmet")
            budget = true;
    }
    return budget ? 2 : 0;
}

inline void sort_reports(std::vector<VerificationReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.claim != b.claim) return a.claim < b.claim;
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.k_values < b.k_values;
    });
}

// ---------------------------------------------------------------------------
// Apex covers: a cover of K_1 v H with the pair-edge / hyperedge labeling.
// ---------------------------------------------------------------------------

/// Cover over M = K_1 v H keyed by the apex vertex w: pair edges {w, v_i} for
/// every base vertex and the original hyperedges of H. Pair-edge families
/// must carry exactly one row per apex color j; the "level slice" Phi_j picks
/// that row's base-vertex color from every pair edge.
struct ApexCover {
    Hypergraph joined;
    Hypergraph base;
    VertexId apex = 0;
    std::vector<VertexId> base_vertices;      // ascending
    std::vector<std::size_t> pair_edge;       // joined edge index of {v_i, w}
    std::vector<std::size_t> pair_apex_pos;   // position of w inside that edge
    std::vector<std::size_t> hyper_edge;      // joined edge index of each base edge
    Cover cover;
    // slice_color[i][j-1] = Phi_j's color at base vertex i
    std::vector<std::vector<int>> slice_color;

    int k() const { return cover.k; }
};

inline ApexCover make_apex_cover(const Hypergraph& base, VertexId apex, const Hypergraph& joined,
                                 Cover cover) {
    ApexCover ac;
    ac.base = base;
    ac.apex = apex;
    ac.joined = joined;
    ac.base_vertices = base.vertices();
    if (auto bad = validate_cover(joined, cover))
        throw std::invalid_argument("apex cover: invalid cover: " + bad->message);
    ac.cover = std::move(cover);
    if (!joined.has_vertex(apex)) throw std::invalid_argument("apex cover: apex not in hypergraph");
    for (VertexId v : ac.base_vertices) {
        auto idx = joined.find_edge({v, apex});
        if (!idx) throw std::invalid_argument("apex cover: missing pair edge at a base vertex");
        ac.pair_edge.push_back(*idx);
        const auto& e = joined.edge(*idx);
        ac.pair_apex_pos.push_back(e[0] == apex ? 0 : 1);
    }
    for (const auto& e : base.edges()) {
        auto idx = joined.find_edge(e);
        if (!idx) throw std::invalid_argument("apex cover: base edge missing from the join");
        ac.hyper_edge.push_back(*idx);
    }
    int k = ac.cover.k;
    ac.slice_color.assign(ac.base_vertices.size(), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (std::size_t i = 0; i < ac.base_vertices.size(); ++i) {
        const auto& fam = ac.cover.per_edge[ac.pair_edge[i]];
        if (fam.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("apex cover: pair-edge family must have exactly k maps");
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (const auto& m : fam) {
            int j = m.colors[ac.pair_apex_pos[i]];
            if (seen[static_cast<std::size_t>(j - 1)])
                throw std::invalid_argument("apex cover: two pair-edge maps share an apex color");
            seen[static_cast<std::size_t>(j - 1)] = true;
            ac.slice_color[i][static_cast<std::size_t>(j - 1)] =
                m.colors[1 - ac.pair_apex_pos[i]];
        }
    }
    return ac;
}

/// Whether slice Phi_j is a level mapping: every hyperedge carries a row that
/// matches Phi_j's colors on all of its vertices.
struct LevelCheck {
    bool is_level = false;
    std::vector<int> matched_row;  // per hyperedge; -1 when no row matches
    std::optional<std::size_t> failing_hyperedge;
    std::vector<int> missing_pattern;
};

inline LevelCheck level_mapping_check(const ApexCover& ac, int j) {
    if (j < 1 || j > ac.k()) throw std::invalid_argument("level_mapping_check: level out of range");
    LevelCheck out;
    out.is_level = true;
    for (std::size_t p = 0; p < ac.hyper_edge.size(); ++p) {
        const auto& edge = ac.joined.edge(ac.hyper_edge[p]);
        std::vector<int> want;
        for (VertexId v : edge) {
            std::size_t i = ac.base.vertex_index(v);
            want.push_back(ac.slice_color[i][static_cast<std::size_t>(j - 1)]);
        }
        const auto& fam = ac.cover.per_edge[ac.hyper_edge[p]];
        int matched = -1;
        for (std::size_t q = 0; q < fam.size(); ++q)
            if (fam[q].colors == want) {
                matched = static_cast<int>(q);
                break;
            }
        out.matched_row.push_back(matched);
        if (matched < 0 && out.is_level) {
            out.is_level = false;
            out.failing_hyperedge = p;
            out.missing_pattern = want;
        }
    }
    return out;
}

/// Per-apex-color coloring counts: count_j is the number of base assignments
/// avoiding all hyperedge maps and differing from slice Phi_j at every base
/// vertex; these are exactly the covered colorings with the apex colored j,
/// so they sum to the full count.
struct ApexDecomposition {
    std::vector<std::uint64_t> per_level;
    std::uint64_t total = 0;
    bool sum_matches = false;
};

inline ApexDecomposition apex_decomposition(const ApexCover& ac,
                                            std::uint64_t assignment_budget = 100'000'000ULL) {
    ApexDecomposition out;
    int k = ac.k();
    std::size_t n = ac.base_vertices.size();
    detail::assignment_count_checked(n, k, assignment_budget, "apex_decomposition");
    std::vector<std::vector<std::size_t>> hyper_ids(ac.hyper_edge.size());
    std::vector<std::vector<const std::vector<int>*>> hyper_rows(ac.hyper_edge.size());
    for (std::size_t p = 0; p < ac.hyper_edge.size(); ++p) {
        for (VertexId v : ac.joined.edge(ac.hyper_edge[p]))
            hyper_ids[p].push_back(ac.base.vertex_index(v));
        for (const auto& m : ac.cover.per_edge[ac.hyper_edge[p]])
            hyper_rows[p].push_back(&m.colors);
    }
    for (int j = 1; j <= k; ++j) {
        std::uint64_t count = 0;
        std::vector<int> color(n, 1);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(k);
        for (std::uint64_t step = 0; step < total; ++step) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                if (color[i] == ac.slice_color[i][static_cast<std::size_t>(j - 1)]) ok = false;
            for (std::size_t p = 0; p < hyper_ids.size() && ok; ++p) {
                for (const auto* row : hyper_rows[p]) {
                    bool extends = true;
                    for (std::size_t t = 0; t < hyper_ids[p].size(); ++t)
                        if (color[hyper_ids[p][t]] != (*row)[t]) {
                            extends = false;
                            break;
                        }
                    if (extends) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) ++count;
            for (std::size_t i = 0; i < n; ++i) {
                if (++color[i] <= k) break;
                color[i] = 1;
            }
        }
        out.per_level.push_back(count);
    }
    out.total = count_colorings_brute(ac.joined, ac.cover, assignment_budget, 1);
    std::uint64_t sum = 0;
    for (std::uint64_t c : out.per_level) sum += c;
    out.sum_matches = sum == out.total;
    return out;
}

// ---------------------------------------------------------------------------
// Claim verifiers.
// ---------------------------------------------------------------------------

namespace detail {

inline Json rational_json(const ExactRational& r) { return r.to_string(); }

inline bool dp_feasible(const Hypergraph& h, int k, const DpOptions& opts) {
    auto slots = dp_slots(h, opts.gauge_prune);
    BigInt fact(1);
    for (int i = 2; i <= k; ++i) fact *= BigInt(i);
    BigInt total = BigInt::pow(fact, static_cast<unsigned long long>(slots.size()));
    if (total > BigInt(static_cast<long long>(opts.cover_budget))) return false;
    unsigned __int128 assigns = 1;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) {
        assigns *= static_cast<unsigned>(k);
        if (assigns > opts.assignment_budget) return false;
    }
    return true;
}

}  // namespace detail

/// Claim gir1: for a connected linear uniform hypergraph with even girth, the
/// chromatic polynomial eventually strictly exceeds the closed-form cover
/// bound, hence the DP color function. Verified as: the difference has
/// leading term t * k^(n - z(r-1) + 1) with t > 0, a sign threshold N is
/// produced, and exact evaluations at N..N+10 are strictly positive.
inline VerificationReport verify_even_girth(const Hypergraph& h, const std::string& instance,
                                            ChromaticCache* cache = nullptr) {
    Classification cls = classify(h);
    if (!cls.linear || !cls.uniform_rank)
        throw std::invalid_argument("verify_even_girth: instance must be linear and uniform");
    if (components(h).count() != 1)
        throw std::invalid_argument("verify_even_girth: instance must be connected");
    VerificationReport rep;
    rep.claim = "gir1";
    rep.instance = instance;
    std::optional<int> g = girth(h);
    if (!g || *g % 2 != 0) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        rep.payload["girth"] = g ? Json(*g) : Json("infinity");
        return rep;
    }
    int r = *cls.uniform_rank;
    int n = static_cast<int>(h.vertex_count());
    GirthExpansion ge = girth_expansion(h, cache);
    IntPolynomial p = chromatic_polynomial(h, cache);
    UniformBoundPoly bound = uniform_upper_bound_poly(h);
    IntPolynomial diff =
        p * IntPolynomial::monomial(BigInt(1), bound.k_shift) - bound.num;  // k^shift * (P - bound)
    SignThreshold st = sign_threshold(diff);
    int expected_degree = n - ge.z * (r - 1) + 1 + bound.k_shift;
    bool leading_ok = !diff.is_zero() && diff.degree() == expected_degree &&
                      diff.leading() == BigInt(ge.t);
    bool sign_ok = st.sign == 1;
    bool spot_ok = true;
    Json evals = Json::array();
    if (st.threshold) {
        for (int off = 0; off <= 10; ++off) {
            BigInt k = *st.threshold + BigInt(off);
            BigInt v = diff.evaluate(k);
            if (off <= 1) {
                Json e;
                e["k"] = k.to_string();
                e["difference"] = v.to_string();
                e["P"] = p.evaluate(k).to_string();
                e["bound"] = detail::rational_json(
                    ExactRational(bound.num.evaluate(k),
                                  BigInt::pow(k, static_cast<unsigned long long>(bound.k_shift))));
                evals.push_back(std::move(e));
            }
            if (v.signum() != 1) spot_ok = false;
        }
    }
    rep.payload["n"] = n;
    rep.payload["m"] = h.edge_count();
    rep.payload["r"] = r;
    rep.payload["girth"] = ge.z;
    rep.payload["shortest_cycle_count"] = ge.t;
    rep.payload["P"] = poly_to_json(p);
    rep.payload["bound_numerator"] = poly_to_json(bound.num);
    rep.payload["bound_k_shift"] = bound.k_shift;
    rep.payload["difference_scaled"] = poly_to_json(diff);
    rep.payload["threshold"] = st.threshold ? Json(st.threshold->to_string()) : Json(nullptr);
    rep.payload["leading_term_matches"] = leading_ok;
    rep.payload["residual_degree_bound_holds"] = ge.degree_bound_holds;
    rep.payload["evaluations"] = std::move(evals);
    bool ok = leading_ok && sign_ok && spot_ok && ge.degree_bound_holds;
    rep.status = ok ? VerificationReport::Status::verified : VerificationReport::Status::violated;
    return rep;
}

/// Claim evencyc: an edge whose removal leaves exactly |e|-1 components and
/// whose shortest through-cycle is even is claimed to force
/// delta(k) = (k^{n_e-1}-1) P(H-e,k) - k^{n_e-1} P(H,k) < 0 for k >= N, and
/// with it P_DP < P. The deficit certificate is checked exactly; where the
/// exhaustive search is feasible, explicit witness covers and strictness
/// observations are attached regardless of the certificate's outcome. A
/// violated status means the instance refutes the deficit certificate (the
/// claim's constructive route); the payload records whether the bare
/// comparison P_DP < P still held at the spot-checked k.
inline VerificationReport verify_even_edge(const Hypergraph& h, std::size_t e,
                                           const std::string& instance,
                                           ChromaticCache* cache = nullptr,
                                           const DpOptions& opts = {}) {
    VerificationReport rep;
    rep.claim = "evencyc";
    rep.instance = instance;
    std::size_t ne = h.edge(e).size();
    rep.payload["edge"] = e;
    rep.payload["edge_size"] = ne;
    if (ne < 2) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        rep.payload["why"] = "degenerate edge";
        return rep;
    }
    std::size_t comps = components(delete_edge(h, e)).count();
    rep.payload["components_without_edge"] = comps;
    EdgeGirth eg = girth_of_edge(h, e);
    rep.payload["edge_girth"] = eg.length ? Json(*eg.length) : Json("infinity");
    if (comps != ne - 1 || !eg.length || *eg.length % 2 != 0) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        return rep;
    }
    EvenCycleDeficit def = even_cycle_deficit(h, e, cache);
    rep.payload["delta"] = poly_to_json(def.delta);
    rep.payload["sign"] = def.sign.sign;
    rep.payload["threshold"] =
        def.sign.threshold ? Json(def.sign.threshold->to_string()) : Json(nullptr);
    bool certificate = def.sign.sign == -1;
    if (certificate && def.sign.threshold) {
        for (int off = 0; off <= 10 && certificate; ++off)
            if (def.delta.evaluate(*def.sign.threshold + BigInt(off)).signum() != -1)
                certificate = false;
    }
    rep.payload["deficit_certificate_holds"] = certificate;
    bool ok = certificate;
    IntPolynomial p = chromatic_polynomial(h, cache);
    // spot ks: the threshold and its successor when the certificate names
    // one in desk range, else 2 and 3
    long long n0 = 2;
    if (certificate && def.sign.threshold && def.sign.threshold->fits_int64())
        n0 = std::max<long long>(2, def.sign.threshold->to_int64());
    Json witnesses = Json::array();
    for (long long k = n0; k <= n0 + 1; ++k) {
        Json w;
        w["k"] = k;
        BigInt pk = p.evaluate(k);
        w["P"] = pk.to_string();
        SplitEdgeBound sb = split_edge_bound(h, e, k, cache);
        w["cover_family_value"] = detail::rational_json(sb.value);
        w["cover_family_branch"] = sb.attained_branch;
        // algebra: the quotient branch sits below P exactly when delta(k) < 0
        bool delta_neg = def.delta.evaluate(k).signum() == -1;
        bool branch2_lt = ExactRational::compare(sb.branch2, ExactRational(pk)) < 0;
        if (delta_neg != branch2_lt) ok = false;
        if (detail::dp_feasible(h, static_cast<int>(k), opts)) {
            DpSearchResult dp = dp_exact(h, static_cast<int>(k), opts);
            bool strict = BigInt(static_cast<long long>(dp.value)) < pk;
            w["dp_exact"] = dp.value;
            w["strict"] = strict;
            w["witness_cover"] = cover_to_json(h, expand_spec(h, dp.witness));
            if (delta_neg && !strict) ok = false;  // the certificate promised strictness here
        } else {
            UpperSearchResult up = dp_upper_search(h, static_cast<int>(k),
                                                   UpperStrategy::shifts, 2048, 1,
                                                   opts.assignment_budget, opts.threads);
            w["dp_upper_bound"] = up.value;
            w["strict"] = BigInt(static_cast<long long>(up.value)) < pk;
            w["witness_cover"] = cover_to_json(h, expand_spec(h, up.witness));
        }
        witnesses.push_back(std::move(w));
    }
    rep.payload["witnesses"] = std::move(witnesses);
    rep.status = ok ? VerificationReport::Status::verified : VerificationReport::Status::violated;
    return rep;
}

/// Claim prop1p1: at every k where delta(k) < 0, the constructive cover value
/// is strictly below P(H,k), and the exhaustive DP value (when feasible)
/// respects it.
inline VerificationReport verify_split_edge_path(const Hypergraph& h, std::size_t e,
                                                 const std::vector<long long>& k_range,
                                                 const std::string& instance,
                                                 ChromaticCache* cache = nullptr,
                                                 const DpOptions& opts = {}) {
    VerificationReport rep;
    rep.claim = "prop1p1";
    rep.instance = instance;
    rep.k_values = k_range;
    std::size_t ne = h.edge(e).size();
    rep.payload["edge"] = e;
    if (ne < 2 || components(delete_edge(h, e)).count() != ne - 1) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        return rep;
    }
    EvenCycleDeficit def = even_cycle_deficit(h, e, cache);
    IntPolynomial p = chromatic_polynomial(h, cache);
    bool any_active = false;
    bool ok = true;
    Json rows = Json::array();
    for (long long k : k_range) {
        if (k < 2) continue;
        Json row;
        row["k"] = k;
        BigInt deltak = def.delta.evaluate(k);
        row["delta"] = deltak.to_string();
        BigInt pk = p.evaluate(k);
        row["P"] = pk.to_string();
        SplitEdgeBound sb = split_edge_bound(h, e, k, cache);
        row["cover_family_value"] = detail::rational_json(sb.value);
        if (deltak.signum() == -1) {
            any_active = true;
            bool strict = ExactRational::compare(sb.branch2, ExactRational(pk)) < 0;
            row["strict"] = strict;
            if (!strict) ok = false;
            if (detail::dp_feasible(h, static_cast<int>(k), opts)) {
                DpSearchResult dp = dp_exact(h, static_cast<int>(k), opts);
                row["dp_exact"] = dp.value;
                ExactRational dpv{BigInt(static_cast<long long>(dp.value))};
                if (ExactRational::compare(dpv, sb.value) > 0) ok = false;  // P_DP <= attained value
                if (!(BigInt(static_cast<long long>(dp.value)) < pk)) ok = false;
            }
        }
        rows.push_back(std::move(row));
    }
    rep.payload["rows"] = std::move(rows);
    if (!any_active) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
    } else {
        rep.status = ok ? VerificationReport::Status::verified
                        : VerificationReport::Status::violated;
    }
    return rep;
}

/// Claim lemma9: descriptive audit of the connecting-family leading-term
/// identity. The identity itself is recorded, never asserted; the assertable
/// parts are the minimum member size (which must be l(e)-1 when the chosen
/// pair is the connected pair under the split-edge hypothesis) and the empty
/// family agreement bookkeeping. Chooses the connected pair automatically
/// when v1, v2 are not supplied.
inline VerificationReport audit_connecting_family(const Hypergraph& h, std::size_t e,
                                                  std::optional<VertexId> v1_opt,
                                                  std::optional<VertexId> v2_opt,
                                                  const std::string& instance,
                                                  ChromaticCache* cache = nullptr) {
    VerificationReport rep;
    rep.claim = "lemma9";
    rep.instance = instance;
    const auto& edge = h.edge(e);
    std::size_t ne = edge.size();
    rep.payload["edge"] = e;
    if (ne < 2) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        return rep;
    }
    Hypergraph rest = delete_edge(h, e);
    ComponentPartition parts = components(rest);
    bool split_hypothesis = parts.count() == ne - 1;
    VertexId v1 = edge[0], v2 = edge[1];
    if (v1_opt && v2_opt) {
        v1 = *v1_opt;
        v2 = *v2_opt;
    } else if (split_hypothesis) {
        // the unique pair of edge vertices sharing a component of H - e
        detail::Dsu dsu(rest.vertex_count());
        for (const auto& re : rest.edges())
            for (std::size_t i = 1; i < re.size(); ++i)
                dsu.unite(rest.vertex_index(re[0]), rest.vertex_index(re[i]));
        bool found = false;
        for (std::size_t i = 0; i < ne && !found; ++i)
            for (std::size_t j = i + 1; j < ne && !found; ++j)
                if (dsu.find(rest.vertex_index(edge[i])) == dsu.find(rest.vertex_index(edge[j]))) {
                    v1 = edge[i];
                    v2 = edge[j];
                    found = true;
                }
    }
    ConnectingFamilyAudit audit = connecting_family_audit(h, e, v1, v2, cache);
    rep.payload["v1"] = v1;
    rep.payload["v2"] = v2;
    rep.payload["split_hypothesis"] = split_hypothesis;
    rep.payload["family_size"] = audit.family.member_sets.size();
    rep.payload["min_member_size"] =
        audit.family.min_size ? Json(*audit.family.min_size) : Json(nullptr);
    EdgeGirth eg = girth_of_edge(h, e);
    rep.payload["edge_girth"] = eg.length ? Json(*eg.length) : Json("infinity");
    rep.payload["lhs"] = poly_to_json(audit.lhs);
    rep.payload["rhs_covered_convention"] = poly_to_json(audit.rhs_covered);
    rep.payload["rhs_spanning_convention"] = poly_to_json(audit.rhs_spanning);
    rep.payload["equal_covered"] = audit.equal_covered;
    rep.payload["equal_spanning"] = audit.equal_spanning;
    rep.payload["leading_covered"] = audit.leading_covered;
    rep.payload["leading_spanning"] = audit.leading_spanning;
    rep.payload["diff_covered"] = poly_to_json(audit.diff_covered);
    rep.payload["diff_spanning"] = poly_to_json(audit.diff_spanning);
    bool ok = true;
    if (split_hypothesis && !v1_opt && eg.length && audit.family.min_size) {
        // here (v1, v2) is the connected pair, so the minimum connecting set
        // is a shortest path and closes into a shortest through-cycle
        bool min_ok = static_cast<int>(*audit.family.min_size) == *eg.length - 1;
        rep.payload["min_size_equals_girth_minus_1"] = min_ok;
        ok = ok && min_ok;
    }
    if (audit.family.member_sets.empty())
        rep.payload["empty_family_agreement"] = audit.lhs.is_zero();
    rep.status = ok ? VerificationReport::Status::verified : VerificationReport::Status::violated;
    return rep;
}

/// Claim join-identity: P(H v K_p, k) = (prod_{i=0}^{p-1} (k-i)) P(H, k-p),
/// verified as exact polynomial equality with both sides computed
/// independently, plus spot evaluations.
inline VerificationReport verify_join_identity(const Hypergraph& h, int p,
                                               const std::vector<long long>& k_range,
                                               const std::string& instance,
                                               ChromaticCache* cache = nullptr) {
    if (p < 1) throw std::invalid_argument("verify_join_identity: p must be >= 1");
    VerificationReport rep;
    rep.claim = "join-identity";
    rep.instance = instance;
    rep.k_values = k_range;
    rep.payload["p"] = p;
    JoinResult join = join_clique(h, p);
    IntPolynomial lhs = chromatic_polynomial(join.joined, cache);
    IntPolynomial rhs =
        falling_factorial(p) * chromatic_polynomial(h, cache).shift_argument(BigInt(-p));
    bool equal = lhs == rhs;
    rep.payload["lhs"] = poly_to_json(lhs);
    rep.payload["rhs"] = poly_to_json(rhs);
    rep.payload["equal"] = equal;
    Json rows = Json::array();
    for (long long k : k_range) {
        Json row;
        row["k"] = k;
        row["lhs"] = lhs.evaluate(k).to_string();
        row["rhs"] = rhs.evaluate(k).to_string();
        rows.push_back(std::move(row));
    }
    rep.payload["evaluations"] = std::move(rows);
    rep.status =
        equal ? VerificationReport::Status::verified : VerificationReport::Status::violated;
    return rep;
}

/// Claim level: reports each slice's level-mapping flag and checks the exact
/// per-level sum decomposition of the cover's coloring count.
inline VerificationReport verify_apex_levels(const ApexCover& ac, const std::string& instance,
                                             std::uint64_t assignment_budget = 100'000'000ULL) {
    VerificationReport rep;
    rep.claim = "level";
    rep.instance = instance;
    rep.k_values = {ac.k()};
    Json levels = Json::array();
    for (int j = 1; j <= ac.k(); ++j) {
        LevelCheck lc = level_mapping_check(ac, j);
        Json row;
        row["level"] = j;
        row["is_level_mapping"] = lc.is_level;
        row["matched_rows"] = lc.matched_row;
        if (lc.failing_hyperedge) {
            row["failing_hyperedge"] = *lc.failing_hyperedge;
            row["missing_pattern"] = lc.missing_pattern;
        }
        levels.push_back(std::move(row));
    }
    rep.payload["levels"] = std::move(levels);
    ApexDecomposition dec = apex_decomposition(ac, assignment_budget);
    rep.payload["per_level_counts"] = dec.per_level;
    rep.payload["total"] = dec.total;
    rep.payload["sum_matches_total"] = dec.sum_matches;
    // per-level counts use the counting semantics (the apex color induces
    // unary restrictions), the reading under which the sum identity is exact
    rep.payload["slice_semantics"] = "counting";
    rep.status = dec.sum_matches ? VerificationReport::Status::verified
                                 : VerificationReport::Status::violated;
    return rep;
}

/// Claim lemma2p1: over all perfect covers of K_1 v H in normal form, any
/// cover whose slices include at least k-1 level mappings counts exactly
/// P(K_1 v H, k) colorings. Exhaustive within the cover budget, else a
/// flagged deterministic sample.
inline VerificationReport verify_apex_bijection(const Hypergraph& h, int k,
                                                const std::string& instance,
                                                const DpOptions& opts = {}) {
    VerificationReport rep;
    rep.claim = "lemma2p1";
    rep.instance = instance;
    rep.k_values = {k};
    JoinResult join = join_clique(h, 1);
    const Hypergraph& m = join.joined;
    VertexId apex = join.apex[0];
    ChromaticCache cache;
    BigInt p_m = chromatic_polynomial(m, &cache).evaluate(k);
    auto slots = detail::dp_slots(m, false);  // unpruned: every cover once
    auto perms = detail::permutations_lex(k);
    BigInt total = BigInt::pow(BigInt(static_cast<long long>(perms.size())),
                               static_cast<unsigned long long>(slots.size()));
    bool exhaustive = total <= BigInt(static_cast<long long>(opts.cover_budget));
    std::uint64_t tried =
        exhaustive ? static_cast<std::uint64_t>(total.to_int64()) : opts.cover_budget;
    std::uint64_t qualifying = 0;
    std::optional<Json> counterexample;
    for (std::uint64_t idx = 0; idx < tried && !counterexample; ++idx) {
        PermCoverSpec spec = detail::spec_from_index(m, k, slots, perms, idx);
        Cover cover = expand_spec(m, spec);
        ApexCover ac = make_apex_cover(h, apex, m, cover);
        int level_count = 0;
        for (int j = 1; j <= k; ++j)
            if (level_mapping_check(ac, j).is_level) ++level_count;
        if (level_count < k - 1) continue;
        ++qualifying;
        std::uint64_t count = count_colorings_brute(m, cover, opts.assignment_budget, 1);
        if (BigInt(static_cast<long long>(count)) != p_m) {
            Json ce;
            ce["cover_index"] = idx;
            ce["level_mappings"] = level_count;
            ce["count"] = count;
            ce["expected"] = p_m.to_string();
            ce["cover"] = cover_to_json(m, cover);
            counterexample = std::move(ce);
        }
    }
    rep.payload["covers_enumerated"] = tried;
    rep.payload["covers_total"] = total.to_string();
    rep.payload["exhaustive"] = exhaustive;
    rep.payload["qualifying_covers"] = qualifying;
    rep.payload["expected_count"] = p_m.to_string();
    if (counterexample) {
        rep.payload["counterexample"] = *counterexample;
        rep.status = VerificationReport::Status::violated;
    } else if (!exhaustive) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "budget-exhausted";
    } else {
        rep.status = VerificationReport::Status::verified;
    }
    return rep;
}

/// Claim lemma2p2: with s non-level slices, the cover's count is at least
/// k * P_DP(H, k-1) + s (k - d - |e|)^(n - |e|). The edge-size reading is
/// ambiguous in general, so the bound is evaluated under every distinct edge
/// size; statuses only assert when the readings agree or when s = 0.
inline VerificationReport verify_apex_level_bound(const ApexCover& ac, const std::string& instance,
                                                  const DpOptions& opts = {}) {
    VerificationReport rep;
    rep.claim = "lemma2p2";
    rep.instance = instance;
    int k = ac.k();
    rep.k_values = {k};
    const Hypergraph& h = ac.base;
    if (k < 2 || h.edge_count() == 0) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        return rep;
    }
    int s = 0;
    for (int j = 1; j <= k; ++j)
        if (!level_mapping_check(ac, j).is_level) ++s;
    std::uint64_t total = count_colorings_brute(ac.joined, ac.cover, opts.assignment_budget, 1);
    rep.payload["non_level_slices"] = s;
    rep.payload["total"] = total;
    if (!detail::dp_feasible(h, k - 1, opts)) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "budget-exhausted";
        return rep;
    }
    DpSearchResult dp = dp_exact(h, k - 1, opts);
    BigInt base_term = BigInt(k) * BigInt(static_cast<long long>(dp.value));
    rep.payload["dp_exact_k_minus_1"] = dp.value;
    rep.payload["base_term"] = base_term.to_string();
    int d = coloring_number(h);
    rep.payload["coloring_number"] = d;
    long long n = static_cast<long long>(h.vertex_count());
    std::vector<long long> sizes;
    for (const auto& e : h.edges()) sizes.push_back(static_cast<long long>(e.size()));
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    long long r_max = sizes.back();
    Json readings = Json::array();
    int holds = 0, fails = 0;
    BigInt total_big(static_cast<long long>(total));
    for (long long r : {sizes.front(), sizes.back()}) {
        BigInt term =
            BigInt(s) * BigInt::pow(BigInt(k - d - r), static_cast<unsigned long long>(n - r));
        bool pass = total_big >= base_term + term;
        Json row;
        row["edge_size"] = r;
        row["slice_term"] = term.to_string();
        row["rhs"] = (base_term + term).to_string();
        row["holds"] = pass;
        readings.push_back(std::move(row));
        (pass ? holds : fails) += 1;
        if (sizes.front() == sizes.back()) break;
    }
    rep.payload["readings"] = std::move(readings);
    if (s == 0) {
        rep.status = total_big >= base_term ? VerificationReport::Status::verified
                                            : VerificationReport::Status::violated;
        return rep;
    }
    if (k < d + r_max) {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "hypothesis-unmet";
        return rep;
    }
    if (fails == 0)
        rep.status = VerificationReport::Status::verified;
    else if (holds == 0)
        rep.status = VerificationReport::Status::violated;
    else {
        rep.status = VerificationReport::Status::inconclusive;
        rep.reason = "ambiguous-readings";
    }
    return rep;
}

/// Claims th2p1, co2p1, ans3: the join lower bounds and the eventual-equality
/// question. P_DP values come from the exhaustive search where feasible; when
/// not, the reports refuse to decide (no sound lower bound is available from
/// one-sided searches).
inline std::vector<VerificationReport> verify_join_theorems(const Hypergraph& h, int p,
                                                            const std::vector<long long>& k_range,
                                                            const std::string& instance,
                                                            ChromaticCache* cache = nullptr,
                                                            const DpOptions& opts = {}) {
    if (p < 1) throw std::invalid_argument("verify_join_theorems: p must be >= 1");
    std::vector<VerificationReport> out;
    Classification cls = classify(h);
    int col = coloring_number(h);
    long long n = static_cast<long long>(h.vertex_count());
    long long r_max = 0;
    for (const auto& e : h.edges()) r_max = std::max(r_max, static_cast<long long>(e.size()));
    ChromaticCache local;
    ChromaticCache& cc = cache ? *cache : local;
    // bracket upper bound where the exhaustive search is out of reach; absent
    // when even single counts are beyond the assignment budget
    auto try_upper = [&](const Hypergraph& hh, long long k) -> std::optional<std::uint64_t> {
        unsigned __int128 assigns = 1;
        for (std::size_t i = 0; i < hh.vertex_count(); ++i) {
            assigns *= static_cast<unsigned>(k);
            if (assigns > opts.assignment_budget) return std::nullopt;
        }
        return dp_upper_search(hh, static_cast<int>(k), UpperStrategy::shifts, 1024, 1,
                               opts.assignment_budget, opts.threads)
            .value;
    };

    // th2p1: the p = 1 bound
    {
        VerificationReport rep;
        rep.claim = "th2p1";
        rep.instance = instance;
        rep.k_values = k_range;
        rep.payload["coloring_number"] = col;
        rep.payload["max_edge_size"] = r_max;
        if (col < 3 || h.edge_count() == 0) {
            rep.status = VerificationReport::Status::inconclusive;
            rep.reason = "hypothesis-unmet";
        } else {
            JoinResult join = join_clique(h, 1);
            IntPolynomial p_m = chromatic_polynomial(join.joined, &cc);
            Json rows = Json::array();
            bool any_gated = false, any_infeasible = false;
            bool weak_ok = true, corrected_ok = true;
            for (long long k : k_range) {
                Json row;
                row["k"] = k;
                if (k < col + r_max) {
                    row["status"] = "hypothesis-unmet";
                    rows.push_back(std::move(row));
                    continue;
                }
                any_gated = true;
                if (!detail::dp_feasible(join.joined, static_cast<int>(k), opts) ||
                    !detail::dp_feasible(h, static_cast<int>(k - 1), opts)) {
                    row["status"] = "budget-exhausted";
                    // undecidable bracket: an upper bound from the witness
                    // search, no sound lower bound
                    if (auto up = try_upper(join.joined, k)) row["dp_join_upper_bound"] = *up;
                    row["P_join"] = p_m.evaluate(k).to_string();
                    any_infeasible = true;
                    rows.push_back(std::move(row));
                    continue;
                }
                DpSearchResult dp_m = dp_exact(join.joined, static_cast<int>(k), opts);
                DpSearchResult dp_h = dp_exact(h, static_cast<int>(k - 1), opts);
                BigInt lhs(static_cast<long long>(dp_m.value));
                BigInt pm = p_m.evaluate(k);
                BigInt base = BigInt(k) * BigInt(static_cast<long long>(dp_h.value));
                row["dp_join"] = dp_m.value;
                row["P_join"] = pm.to_string();
                row["k_times_dp"] = base.to_string();
                bool weak = lhs >= (pm <= base ? pm : base);
                row["weak_holds"] = weak;
                if (!weak) weak_ok = false;
                if (cls.uniform_rank) {
                    long long r = *cls.uniform_rank;
                    BigInt corrected = BigInt(2) * BigInt::pow(BigInt(k - col - r),
                                                               static_cast<unsigned long long>(n - r));
                    BigInt literal = BigInt(2) * BigInt::pow(BigInt(k * col - r),
                                                             static_cast<unsigned long long>(n - r));
                    BigInt rhs_corr = base + corrected;
                    BigInt rhs_lit = base + literal;
                    row["corrected_term"] = corrected.to_string();
                    row["literal_term"] = literal.to_string();
                    bool corr = lhs >= (pm <= rhs_corr ? pm : rhs_corr);
                    bool lit = lhs >= (pm <= rhs_lit ? pm : rhs_lit);
                    row["corrected_holds"] = corr;
                    row["literal_holds"] = lit;
                    if (!corr) corrected_ok = false;
                }
                rows.push_back(std::move(row));
            }
            rep.payload["rows"] = std::move(rows);
            if (!any_gated) {
                rep.status = VerificationReport::Status::inconclusive;
                rep.reason = "hypothesis-unmet";
            } else if (!weak_ok) {
                rep.status = VerificationReport::Status::violated;
            } else if (any_infeasible) {
                rep.status = VerificationReport::Status::inconclusive;
                rep.reason = "budget-exhausted";
            } else if (!corrected_ok) {
                rep.status = VerificationReport::Status::inconclusive;
                rep.reason = "ambiguous-readings";
            } else {
                rep.status = VerificationReport::Status::verified;
            }
        }
        out.push_back(std::move(rep));
    }

    // co2p1: the general-p bound without the unknown residual polynomial
    {
        VerificationReport rep;
        rep.claim = "co2p1";
        rep.instance = instance;
        rep.k_values = k_range;
        rep.payload["p"] = p;
        if (col < 3 || !cls.uniform_rank) {
            rep.status = VerificationReport::Status::inconclusive;
            rep.reason = "hypothesis-unmet";
        } else {
            long long r = *cls.uniform_rank;
            JoinResult join = join_clique(h, p);
            IntPolynomial p_join = chromatic_polynomial(join.joined, &cc);
            IntPolynomial ff = falling_factorial(p);
            Json rows = Json::array();
            bool any_gated = false, any_infeasible = false, weak_ok = true;
            for (long long k : k_range) {
                Json row;
                row["k"] = k;
                if (k < col + r + p) {
                    row["status"] = "hypothesis-unmet";
                    rows.push_back(std::move(row));
                    continue;
                }
                any_gated = true;
                if (!detail::dp_feasible(join.joined, static_cast<int>(k), opts) ||
                    !detail::dp_feasible(h, static_cast<int>(k - p), opts)) {
                    row["status"] = "budget-exhausted";
                    if (auto up = try_upper(join.joined, k)) row["dp_join_upper_bound"] = *up;
                    row["P_join"] = p_join.evaluate(k).to_string();
                    any_infeasible = true;
                    rows.push_back(std::move(row));
                    continue;
                }
                DpSearchResult dp_m = dp_exact(join.joined, static_cast<int>(k), opts);
                DpSearchResult dp_h = dp_exact(h, static_cast<int>(k - p), opts);
                BigInt lhs(static_cast<long long>(dp_m.value));
                BigInt pj = p_join.evaluate(k);
                BigInt base = ff.evaluate(k) * BigInt(static_cast<long long>(dp_h.value));
                row["dp_join"] = dp_m.value;
                row["P_join"] = pj.to_string();
                row["factorial_times_dp"] = base.to_string();
                bool weak = lhs >= (pj <= base ? pj : base);
                row["weak_holds"] = weak;
                row["margin"] = (lhs - (pj <= base ? pj : base)).to_string();
                if (!weak) weak_ok = false;
                rows.push_back(std::move(row));
            }
            rep.payload["rows"] = std::move(rows);
            if (!any_gated) {
                rep.status = VerificationReport::Status::inconclusive;
                rep.reason = "hypothesis-unmet";
            } else if (!weak_ok) {
                rep.status = VerificationReport::Status::violated;
            } else if (any_infeasible) {
                rep.status = VerificationReport::Status::inconclusive;
                rep.reason = "budget-exhausted";
            } else {
                rep.status = VerificationReport::Status::verified;
            }
        }
        out.push_back(std::move(rep));
    }

    // ans3: observed gap boundedness and eventual equality, reported per k
    {
        VerificationReport rep;
        rep.claim = "ans3";
        rep.instance = instance;
        rep.k_values = k_range;
        rep.payload["p"] = p;
        if (!cls.uniform_rank) {
            rep.status = VerificationReport::Status::inconclusive;
            rep.reason = "hypothesis-unmet";
        } else {
            long long r = *cls.uniform_rank;
            IntPolynomial p_h = chromatic_polynomial(h, &cc);
            JoinResult join = join_clique(h, p);
            IntPolynomial p_join = chromatic_polynomial(join.joined, &cc);
            Json gap_rows = Json::array();
            Json eq_rows = Json::array();
            bool any = false;
            for (long long k : k_range) {
                if (k >= 1 && detail::dp_feasible(h, static_cast<int>(k), opts)) {
                    any = true;
                    DpSearchResult dp = dp_exact(h, static_cast<int>(k), opts);
                    BigInt gap = p_h.evaluate(k) - BigInt(static_cast<long long>(dp.value));
                    Json row;
                    row["k"] = k;
                    row["gap"] = gap.to_string();
                    BigInt cap = (n - r - 1) >= 0
                                     ? BigInt::pow(BigInt(k), static_cast<unsigned long long>(n - r - 1))
                                     : BigInt(0);
                    row["gap_cap"] = cap.to_string();
                    row["within_cap"] = gap <= cap;
                    gap_rows.push_back(std::move(row));
                }
                if (k > p && detail::dp_feasible(join.joined, static_cast<int>(k), opts)) {
                    any = true;
                    DpSearchResult dp = dp_exact(join.joined, static_cast<int>(k), opts);
                    Json row;
                    row["k"] = k;
                    row["dp_join"] = dp.value;
                    BigInt pj = p_join.evaluate(k);
                    row["P_join"] = pj.to_string();
                    row["equal"] = BigInt(static_cast<long long>(dp.value)) == pj;
                    eq_rows.push_back(std::move(row));
                }
            }
            rep.payload["gap_observations"] = std::move(gap_rows);
            rep.payload["join_equality"] = std::move(eq_rows);
            if (any) {
                rep.status = VerificationReport::Status::verified;
            } else {
                rep.status = VerificationReport::Status::inconclusive;
                rep.reason = "budget-exhausted";
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Audit runner.
// ---------------------------------------------------------------------------

struct AuditConfig {
    std::uint64_t seed = 1;
    DpOptions dp;
    std::uint64_t assignment_budget = 100'000'000ULL;
    std::vector<std::string> claims;  // empty = every claim

    bool wants(const std::string& claim) const {
        if (claims.empty()) return true;
        return std::find(claims.begin(), claims.end(), claim) != claims.end();
    }
};

/// The repository-shipped 3-fold apex cover example: two 3-edges sharing one
/// vertex, joined with one apex; slice 2 is a level mapping, slices 1 and 3
/// are not. Built in code so the audit needs no data files; the shipped data/
/// encoding is the same cover (a test pins them equal).
inline ApexCover builtin_apex_example() {
    Hypergraph base = Hypergraph::from_edges({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}});
    JoinResult join = join_clique(base, 1);  // apex id 6
    const Hypergraph& m = join.joined;
    Cover cover;
    cover.k = 3;
    cover.per_edge.resize(m.edge_count());
    auto put = [&](std::vector<VertexId> verts, std::vector<std::vector<int>> rows) {
        std::vector<VertexId> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        auto idx = m.find_edge(sorted);
        if (!idx) throw std::logic_error("builtin_apex_example: edge lookup failed");
        for (const auto& row : rows) {
            PartialMap pm;
            pm.edge = *idx;
            pm.colors.assign(sorted.size(), 0);
            for (std::size_t pos = 0; pos < verts.size(); ++pos) {
                auto it = std::lower_bound(sorted.begin(), sorted.end(), verts[pos]);
                pm.colors[static_cast<std::size_t>(it - sorted.begin())] = row[pos];
            }
            cover.per_edge[*idx].push_back(std::move(pm));
        }
    };
    // rows listed as (w, v_i) pairs for the pair edges
    put({6, 1}, {{1, 1}, {2, 2}, {3, 3}});
    put({6, 2}, {{1, 2}, {2, 3}, {3, 1}});
    put({6, 3}, {{1, 3}, {2, 1}, {3, 2}});
    put({6, 4}, {{1, 1}, {2, 2}, {3, 3}});
    put({6, 5}, {{1, 1}, {2, 3}, {3, 2}});
    put({1, 2, 3}, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    put({3, 4, 5}, {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}});
    return make_apex_cover(base, 6, m, std::move(cover));
}

/// Runs every applicable verifier over a small deterministic corpus.
inline std::vector<VerificationReport> run_audit(const AuditConfig& cfg = {}) {
    std::vector<VerificationReport> reports;
    ChromaticCache cache;
    DpOptions dp = cfg.dp;
    std::vector<long long> small_k{2, 3, 4};

    struct Inst {
        std::string label;
        Hypergraph h;
    };
    if (cfg.wants("gir1")) {
        for (const char* spec : {"cycle:2:4", "cycle:2:6", "cycle:3:4", "cycle:3:3"})
            reports.push_back(verify_even_girth(generate_instance(spec), spec, &cache));
    }

    Hypergraph pendant = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}, {1, 2}});
    std::string pendant_label = "edges:{1,2,3}+{1,2}";
    if (cfg.wants("evencyc") || cfg.wants("prop1p1")) {
        std::vector<Inst> even_instances;
        even_instances.push_back({"cycle:2:4", generate_instance("cycle:2:4")});
        even_instances.push_back({pendant_label, pendant});
        even_instances.push_back({"cycle:2:3", generate_instance("cycle:2:3")});
        even_instances.push_back({"theta:2:1:3", generate_instance("theta:2:1:3")});
        for (const auto& inst : even_instances) {
            // first eligible edge if any, else edge 0 to exercise the unmet path
            std::size_t pick = 0;
            for (std::size_t e = 0; e < inst.h.edge_count(); ++e) {
                std::size_t ne = inst.h.edge(e).size();
                if (ne < 2) continue;
                if (components(delete_edge(inst.h, e)).count() != ne - 1) continue;
                EdgeGirth eg = girth_of_edge(inst.h, e);
                if (eg.length && *eg.length % 2 == 0) {
                    pick = e;
                    break;
                }
            }
            if (cfg.wants("evencyc"))
                reports.push_back(verify_even_edge(inst.h, pick, inst.label, &cache, dp));
            if (cfg.wants("prop1p1"))
                reports.push_back(
                    verify_split_edge_path(inst.h, pick, small_k, inst.label, &cache, dp));
        }
    }

    Hypergraph tree2 = gen_hypertree(3, 2, cfg.seed);
    Hypergraph edge3 = gen_hypertree(3, 1, cfg.seed);
    if (cfg.wants("lemma9")) {
        reports.push_back(audit_connecting_family(generate_instance("cycle:2:3"), 0, std::nullopt,
                                                  std::nullopt, "cycle:2:3", &cache));
        reports.push_back(audit_connecting_family(generate_instance("cycle:2:4"), 0, std::nullopt,
                                                  std::nullopt, "cycle:2:4", &cache));
        reports.push_back(audit_connecting_family(tree2, 0, std::nullopt, std::nullopt,
                                                  "hypertree:3:2", &cache));
    }

    if (cfg.wants("join-identity")) {
        reports.push_back(verify_join_identity(generate_instance("cycle:2:4"), 1, {2, 3, 4, 5},
                                               "cycle:2:4", &cache));
        reports.push_back(verify_join_identity(edge3, 1, {2, 3, 4}, "hypertree:3:1", &cache));
        reports.push_back(verify_join_identity(tree2, 2, {3, 4}, "hypertree:3:2", &cache));
    }

    if (cfg.wants("level") || cfg.wants("lemma2p2")) {
        ApexCover apex = builtin_apex_example();
        if (cfg.wants("level"))
            reports.push_back(
                verify_apex_levels(apex, "builtin:apex-example", cfg.assignment_budget));
        if (cfg.wants("lemma2p2"))
            reports.push_back(verify_apex_level_bound(apex, "builtin:apex-example", dp));
    }

    if (cfg.wants("lemma2p1"))
        reports.push_back(verify_apex_bijection(edge3, 2, "hypertree:3:1", dp));

    if (cfg.wants("th2p1") || cfg.wants("co2p1") || cfg.wants("ans3")) {
        for (auto& rep : verify_join_theorems(edge3, 1, {3, 4}, "hypertree:3:1", &cache, dp))
            if (cfg.wants(rep.claim)) reports.push_back(std::move(rep));
    }

    sort_reports(reports);
    return reports;
}

}  // namespace hyperchroma
