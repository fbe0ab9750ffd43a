#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "hyperchroma/generators.hpp"
#include "hyperchroma/harness.hpp"
#include "hyperchroma/io.hpp"

#include "oracles.hpp"

using namespace hyperchroma;

namespace {

using Status = VerificationReport::Status;

Hypergraph pendant_pair() {
    return Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}, {1, 2}});
}

ApexCover apex_from_files() {
    NamedHypergraph nh = parse_hypergraph_file(std::string(HYPERCHROMA_DATA_DIR) +
                                               "/apex_example.hg");
    std::ifstream cf(std::string(HYPERCHROMA_DATA_DIR) + "/apex_example.cover.json");
    REQUIRE(cf.good());
    Cover cover = cover_from_json(nh.h, Json::parse(cf), &nh.id_of);
    VertexId apex = nh.id_of.at("w");
    std::vector<VertexId> base_verts;
    for (VertexId v : nh.h.vertices())
        if (v != apex) base_verts.push_back(v);
    std::vector<std::vector<VertexId>> base_edges;
    for (const auto& e : nh.h.edges())
        if (!std::binary_search(e.begin(), e.end(), apex)) base_edges.push_back(e);
    return make_apex_cover(Hypergraph::from_edges(base_verts, base_edges), apex, nh.h,
                           std::move(cover));
}

}  // namespace

TEST_CASE("even-girth verification on the desk instances") {
    ChromaticCache cache;
    VerificationReport r34 = verify_even_girth(gen_linear_cycle(3, 4), "cycle:3:4", &cache);
    CHECK(r34.status == Status::verified);
    CHECK(r34.payload["threshold"] == "2");
    CHECK(r34.payload["girth"] == 4);
    CHECK(r34.payload["shortest_cycle_count"] == 1);
    // at k = N = 2: P = 82 against the bound 81
    CHECK(r34.payload["evaluations"][0]["P"] == "82");
    CHECK(r34.payload["evaluations"][0]["bound"] == "81");
    CHECK(r34.payload["evaluations"][0]["difference"] == "1");

    CHECK(verify_even_girth(gen_linear_cycle(2, 4), "cycle:2:4", &cache).status ==
          Status::verified);
    CHECK(verify_even_girth(gen_linear_cycle(2, 6), "cycle:2:6", &cache).status ==
          Status::verified);

    VerificationReport odd = verify_even_girth(gen_linear_cycle(3, 3), "cycle:3:3", &cache);
    CHECK(odd.status == Status::inconclusive);
    CHECK(odd.reason == "hypothesis-unmet");

    VerificationReport acyclic = verify_even_girth(gen_hypertree(3, 2, 1), "hypertree", &cache);
    CHECK(acyclic.status == Status::inconclusive);

    CHECK_THROWS_AS(verify_even_girth(Hypergraph::from_edges({1, 2, 3, 4}, {{1, 2, 3}, {2, 3, 4}}),
                                      "nonlinear", &cache),
                    std::invalid_argument);
}

TEST_CASE("even-edge verification") {
    ChromaticCache cache;
    VerificationReport c4 = verify_even_edge(gen_linear_cycle(2, 4), 0, "cycle:2:4", &cache);
    CHECK(c4.status == Status::verified);
    CHECK(c4.payload["threshold"] == "2");
    CHECK(c4.payload["sign"] == -1);
    // dp witnesses recorded at k = 2, 3 with strict inequality
    REQUIRE(c4.payload["witnesses"].size() == 2);
    CHECK(c4.payload["witnesses"][0]["k"] == 2);
    CHECK(c4.payload["witnesses"][0]["dp_exact"] == 0);
    CHECK(c4.payload["witnesses"][1]["k"] == 3);
    CHECK(c4.payload["witnesses"][1]["dp_exact"] == 15);
    CHECK(c4.payload["witnesses"][1]["P"] == "18");
    CHECK(c4.payload["witnesses"][1]["strict"] == true);

    Hypergraph mixed = pendant_pair();
    std::size_t e = oracle::edge_index_of(mixed, {1, 2, 3});
    VerificationReport mr = verify_even_edge(mixed, e, "pendant", &cache);
    CHECK(mr.status == Status::verified);
    CHECK(mr.payload["edge_girth"] == 2);
    CHECK(mr.payload["components_without_edge"] == 2);

    VerificationReport k3 = verify_even_edge(gen_linear_cycle(2, 3), 0, "cycle:2:3", &cache);
    CHECK(k3.status == Status::inconclusive);
    CHECK(k3.reason == "hypothesis-unmet");
    CHECK(k3.payload["edge_girth"] == 3);

    // two 3-edges through a shared pair form a 2-cycle; both hypotheses hold
    VerificationReport theta = verify_even_edge(gen_theta(3, 1, 1), 0, "theta:3:1:1", &cache);
    CHECK(theta.status == Status::verified);
    CHECK(theta.payload["edge_girth"] == 2);
    CHECK(theta.payload["deficit_certificate_holds"] == true);
    CHECK(theta.payload["witnesses"][0]["dp_exact"] == 8);   // P(2) = 10
    CHECK(theta.payload["witnesses"][1]["dp_exact"] == 63);  // P(3) = 66
    // the payload carries a replayable witness cover
    const Json& wc = theta.payload["witnesses"][0]["witness_cover"];
    Hypergraph th = gen_theta(3, 1, 1);
    Cover replay = cover_from_json(th, wc);
    CHECK(count_colorings_brute(th, replay) == 8);
}

TEST_CASE("even-edge verification surfaces deficit counterexamples") {
    // the triangle-plus-triple instance meets both hypotheses but its deficit
    // is positive: the constructive route fails and the report says so, while
    // the spot observations show the bare comparison still held at k = 3
    ChromaticCache cache;
    Hypergraph h = Hypergraph::from_edges({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
    std::size_t e = *h.find_edge({1, 2});
    VerificationReport rep = verify_even_edge(h, e, "triangle+triple", &cache);
    CHECK(rep.status == Status::violated);
    CHECK(rep.payload["deficit_certificate_holds"] == false);
    CHECK(rep.payload["sign"] == 1);
    REQUIRE(rep.payload["witnesses"].size() == 2);
    CHECK(rep.payload["witnesses"][1]["k"] == 3);
    CHECK(rep.payload["witnesses"][1]["dp_exact"] == 3);
    CHECK(rep.payload["witnesses"][1]["strict"] == true);  // 3 < P(3) = 6
}

TEST_CASE("constructive split-edge path") {
    ChromaticCache cache;
    VerificationReport r =
        verify_split_edge_path(gen_linear_cycle(2, 4), 0, {2, 3, 4}, "cycle:2:4", &cache);
    CHECK(r.status == Status::verified);
    bool saw_strict = false;
    for (const auto& row : r.payload["rows"])
        if (row.contains("strict") && row["strict"] == true) saw_strict = true;
    CHECK(saw_strict);

    // triangle: delta > 0 everywhere, so the constructive regime never opens
    VerificationReport t =
        verify_split_edge_path(gen_linear_cycle(2, 3), 0, {2, 3, 4}, "cycle:2:3", &cache);
    CHECK(t.status == Status::inconclusive);
    CHECK(t.reason == "hypothesis-unmet");

    // hypertree edge: the component hypothesis itself fails
    VerificationReport h =
        verify_split_edge_path(gen_hypertree(3, 2, 1), 0, {2, 3}, "hypertree:3:2", &cache);
    CHECK(h.status == Status::inconclusive);
}

TEST_CASE("connecting-family audit reports") {
    ChromaticCache cache;
    VerificationReport tri = audit_connecting_family(gen_linear_cycle(2, 3), 0, std::nullopt,
                                                     std::nullopt, "cycle:2:3", &cache);
    CHECK(tri.status == Status::verified);  // audit completes; identity recorded, not asserted
    CHECK(tri.payload["equal_covered"] == false);
    CHECK(tri.payload["leading_covered"] == false);
    CHECK(tri.payload["min_size_equals_girth_minus_1"] == true);

    VerificationReport tree = audit_connecting_family(gen_hypertree(3, 2, 1), 0, std::nullopt,
                                                      std::nullopt, "hypertree:3:2", &cache);
    CHECK(tree.status == Status::verified);
    CHECK(tree.payload["family_size"] == 0);
    CHECK(tree.payload["empty_family_agreement"] == true);
}

TEST_CASE("join identity") {
    ChromaticCache cache;
    VerificationReport c4 = verify_join_identity(gen_linear_cycle(2, 4), 1, {4}, "cycle:2:4",
                                                 &cache);
    CHECK(c4.status == Status::verified);
    CHECK(c4.payload["evaluations"][0]["lhs"] == "72");
    CHECK(c4.payload["evaluations"][0]["rhs"] == "72");

    Hypergraph single = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}});
    CHECK(verify_join_identity(single, 1, {2, 3}, "edge3", &cache).status == Status::verified);
    for (int p : {1, 2, 3})
        CHECK(verify_join_identity(gen_hypertree(3, 2, 5), p, {3}, "hypertree", &cache).status ==
              Status::verified);
}

TEST_CASE("builtin apex example matches the shipped encoding") {
    ApexCover built = builtin_apex_example();
    ApexCover from_files = apex_from_files();
    CHECK(built.joined == from_files.joined);
    CHECK(built.base == from_files.base);
    CHECK(cover_to_json(built.joined, built.cover) ==
          cover_to_json(from_files.joined, from_files.cover));
}

TEST_CASE("apex labeling is validated on construction") {
    // a base vertex without its pair edge
    Hypergraph not_join = Hypergraph::from_edges({1, 2, 3, 4}, {{1, 2, 3}, {1, 4}});
    Hypergraph base = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}});
    CHECK_THROWS_AS(make_apex_cover(base, 4, not_join, natural_cover(not_join, 2)),
                    std::invalid_argument);
    // a deficient pair-edge family
    JoinResult join = join_clique(base, 1);
    Cover cover = natural_cover(join.joined, 2);
    cover.per_edge[*join.joined.find_edge({1, 4})].pop_back();
    CHECK_THROWS_AS(make_apex_cover(base, join.apex[0], join.joined, std::move(cover)),
                    std::invalid_argument);
}

TEST_CASE("level mappings of the apex example") {
    ApexCover ac = builtin_apex_example();
    LevelCheck l1 = level_mapping_check(ac, 1);
    LevelCheck l2 = level_mapping_check(ac, 2);
    LevelCheck l3 = level_mapping_check(ac, 3);
    CHECK(!l1.is_level);
    CHECK(l2.is_level);
    CHECK(!l3.is_level);
    // the missing pattern sits on the second hyperedge both times
    REQUIRE(l1.failing_hyperedge.has_value());
    CHECK(*l1.failing_hyperedge == 1);
    CHECK(l1.missing_pattern == std::vector<int>{3, 1, 1});
    REQUIRE(l3.failing_hyperedge.has_value());
    CHECK(*l3.failing_hyperedge == 1);
    CHECK(l3.missing_pattern == std::vector<int>{2, 3, 2});
    // slice 2 matches rows in both hyperedge families
    CHECK(l2.matched_row == std::vector<int>{1, 0});
}

TEST_CASE("apex decomposition sums to the full count") {
    ApexCover ac = builtin_apex_example();
    ApexDecomposition dec = apex_decomposition(ac);
    CHECK(dec.sum_matches);
    CHECK(dec.per_level.size() == 3);

    // natural apex cover over a hypertree: every level holds P(H, k-1)-like
    // slices and the total equals P(K_1 v H, k)
    Hypergraph tree = gen_hypertree(3, 2, 3);
    JoinResult join = join_clique(tree, 1);
    ApexCover nat = make_apex_cover(tree, join.apex[0], join.joined,
                                    natural_cover(join.joined, 3));
    ApexDecomposition ndec = apex_decomposition(nat);
    CHECK(ndec.sum_matches);
    ChromaticCache cache;
    CHECK(BigInt(static_cast<long long>(ndec.total)) ==
          chromatic_polynomial(join.joined, &cache).evaluate(3));
    for (std::uint64_t c : ndec.per_level) CHECK(c == ndec.total / 3);
}

TEST_CASE("apex bijection claim: exhaustive at k = 2 over the single 3-edge") {
    Hypergraph single = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}});
    VerificationReport rep = verify_apex_bijection(single, 2, "edge3");
    CHECK(rep.status == Status::verified);
    CHECK(rep.payload["exhaustive"] == true);
    CHECK(rep.payload["covers_total"] == "32");
    CHECK(rep.payload["qualifying_covers"].get<std::uint64_t>() >= 1);
    CHECK(rep.payload["expected_count"] == "0");  // P(K_1 v 3-edge, 2) = 2*(1-1) = 0

    VerificationReport rep3 = verify_apex_bijection(single, 3, "edge3");
    CHECK(rep3.status == Status::verified);
    CHECK(rep3.payload["exhaustive"] == true);
    CHECK(rep3.payload["covers_total"] == "7776");
    CHECK(rep3.payload["expected_count"] == "18");  // 3 * P(3-edge, 2)
    CHECK(rep3.payload["qualifying_covers"].get<std::uint64_t>() >= 1);

    // a tight budget flips the run into a flagged deterministic sample
    DpOptions tight;
    tight.cover_budget = 8;
    VerificationReport sampled = verify_apex_bijection(single, 2, "edge3", tight);
    CHECK(sampled.status == Status::inconclusive);
    CHECK(sampled.reason == "budget-exhausted");
    CHECK(sampled.payload["exhaustive"] == false);
    CHECK(sampled.payload["covers_enumerated"] == 8);
}

TEST_CASE("apex level bound claim") {
    // natural apex cover: s = 0 reduces to total >= k * dp(k-1)
    Hypergraph tree = gen_hypertree(3, 2, 3);
    JoinResult join = join_clique(tree, 1);
    ApexCover nat = make_apex_cover(tree, join.apex[0], join.joined,
                                    natural_cover(join.joined, 3));
    VerificationReport rep = verify_apex_level_bound(nat, "hypertree-natural");
    CHECK(rep.status == Status::verified);
    CHECK(rep.payload["non_level_slices"] == 0);
    CHECK(rep.payload["total"] == 54);
    CHECK(rep.payload["dp_exact_k_minus_1"] == 18);

    // the shipped example: s = 2 but k = 3 sits below col + r = 6
    VerificationReport ex = verify_apex_level_bound(builtin_apex_example(), "apex-example");
    CHECK(ex.status == Status::inconclusive);
    CHECK(ex.reason == "hypothesis-unmet");
    CHECK(ex.payload["non_level_slices"] == 2);
    REQUIRE(ex.payload.contains("readings"));
    CHECK(ex.payload["readings"].size() == 1);  // uniform: one distinct edge size
    CHECK(ex.payload["readings"][0]["holds"].is_boolean());
}

TEST_CASE("join theorems") {
    ChromaticCache cache;
    Hypergraph single = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}});
    auto reports = verify_join_theorems(single, 1, {3, 4}, "edge3", &cache);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].claim == "th2p1");
    CHECK(reports[1].claim == "co2p1");
    CHECK(reports[2].claim == "ans3");
    // col(3-edge) = 3, max edge 3: both bounds are gated at k >= 6 / 7
    CHECK(reports[0].status == Status::inconclusive);
    CHECK(reports[0].reason == "hypothesis-unmet");
    CHECK(reports[1].status == Status::inconclusive);
    // ans3 computes: the gap P - P_DP is 0 at k = 3, within the k^{n-r-1} cap
    CHECK(reports[2].status == Status::verified);
    REQUIRE(!reports[2].payload["gap_observations"].empty());
    CHECK(reports[2].payload["gap_observations"][0]["gap"] == "0");
    CHECK(reports[2].payload["gap_observations"][0]["within_cap"] == true);
    REQUIRE(!reports[2].payload["join_equality"].empty());
}

TEST_CASE("join theorem brackets on search-infeasible instances") {
    // C_4 has coloring number 3, so the p = 1 bound is gated at k >= 5, where
    // the exhaustive search over the wheel is out of budget: the report
    // refuses to decide and carries the one-sided bracket
    ChromaticCache cache;
    auto reports = verify_join_theorems(gen_linear_cycle(2, 4), 1, {5}, "cycle:2:4", &cache);
    const VerificationReport& th = reports[0];
    REQUIRE(th.claim == "th2p1");
    CHECK(th.status == Status::inconclusive);
    CHECK(th.reason == "budget-exhausted");
    const Json& row = th.payload["rows"][0];
    CHECK(row["status"] == "budget-exhausted");
    REQUIRE(row.contains("dp_join_upper_bound"));
    CHECK(row["P_join"] == "420");  // 5 * P(C_4, 4)
    CHECK(row["dp_join_upper_bound"].get<std::uint64_t>() <= 420);
}

TEST_CASE("audit statuses, determinism, and exit aggregation") {
    AuditConfig cfg;
    auto reports = run_audit(cfg);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
        bool ok = r.status == Status::verified ||
                  (r.status == Status::inconclusive && r.reason == "hypothesis-unmet");
        CHECK_MESSAGE(ok, r.claim, " on ", r.instance, " -> ", to_string(r.status), " ",
                      r.reason);
    }
    CHECK(aggregate_exit(reports) == 0);
    // byte-identical on a second run with the same seed
    auto again = run_audit(cfg);
    CHECK(reports_to_json(reports).dump(2) == reports_to_json(again).dump(2));
    // reports arrive sorted
    for (std::size_t i = 1; i < reports.size(); ++i) {
        auto key = [](const VerificationReport& r) {
            return std::make_tuple(r.claim, r.instance, r.k_values);
        };
        CHECK(key(reports[i - 1]) <= key(reports[i]));
    }
}

TEST_CASE("audit claim filter") {
    AuditConfig cfg;
    cfg.claims = {"gir1"};
    auto reports = run_audit(cfg);
    CHECK(reports.size() == 4);
    for (const auto& r : reports) CHECK(r.claim == "gir1");
    cfg.claims = {"no-such-claim"};
    CHECK(run_audit(cfg).empty());
    CHECK(aggregate_exit(run_audit(cfg)) == 0);
}

TEST_CASE("exit aggregation") {
    VerificationReport ok;
    ok.status = Status::verified;
    VerificationReport unmet;
    unmet.status = Status::inconclusive;
    unmet.reason = "hypothesis-unmet";
    VerificationReport budget;
    budget.status = Status::inconclusive;
    budget.reason = "budget-exhausted";
    VerificationReport bad;
    bad.status = Status::violated;
    CHECK(aggregate_exit({}) == 0);
    CHECK(aggregate_exit({ok, unmet}) == 0);
    CHECK(aggregate_exit({ok, budget}) == 2);
    CHECK(aggregate_exit({ok, budget, bad}) == 1);
}
