// Acceptance suite: every release criterion in one binary, one PASS/FAIL
// line per criterion. Run through ctest so the tool binaries' paths are in
// the environment.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperchroma/chromatic.hpp"
#include "hyperchroma/covers.hpp"
#include "hyperchroma/generators.hpp"
#include "hyperchroma/harness.hpp"
#include "hyperchroma/io.hpp"

#include "oracles.hpp"

using namespace hyperchroma;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int id;
    const char* title;
    bool ok = true;
    Criterion(int id, const char* title) : id(id), title(title) {}
    void expect(bool cond, const char* what) {
        ok = ok && cond;
        std::string msg = "criterion " + std::to_string(id) + ": " + what;
        CHECK_MESSAGE(cond, msg);
    }
    ~Criterion() {
        std::printf("[criterion %02d] %s - %s\n", id, ok ? "PASS" : "FAIL", title);
        std::fflush(stdout);
    }
};

IntPolynomial poly(std::vector<long long> ascending) {
    std::vector<BigInt> coeffs;
    for (long long c : ascending) coeffs.emplace_back(c);
    return IntPolynomial(std::move(coeffs));
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "hyperchroma_acceptance";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int run_tool(const std::string& bin, const std::string& args, const fs::path& stdout_to) {
    std::string cmd = bin + " " + args + " > " + stdout_to.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

const char* tool_env(const char* name) {
    const char* v = std::getenv(name);
    return v ? v : "";
}

}  // namespace

TEST_CASE("criterion 1: chromatic routes agree on the random corpus") {
    Criterion c(1, "dual-oracle chromatic equality over 200 random hypergraphs");
    ChromaticCache cache;
    auto corpus = oracle::corpus(200, 0xC0FFEE);
    c.expect(corpus.size() == 200, "corpus size");
    for (const auto& h : corpus) {
        IntPolynomial dc = chromatic_polynomial(h, &cache);
        c.expect(dc == chromatic_subset_expansion(h), "deletion-contraction == subset expansion");
        for (int k : {2, 3})
            c.expect(dc.evaluate(k) ==
                         BigInt(static_cast<long long>(chromatic_brute_count(h, k))),
                     "polynomial value == brute count");
    }
}

TEST_CASE("criterion 2: 4-cycle DP suite with an emitted witness") {
    Criterion c(2, "C4: P(3)=18, dp(3)=15 with replayable witness, dp(2)=0, split-edge 15");
    ChromaticCache cache;
    Hypergraph c4 = gen_linear_cycle(2, 4);
    c.expect(chromatic_polynomial(c4, &cache).evaluate(3) == BigInt(18), "P(C4,3) = 18");
    DpSearchResult dp3 = dp_exact(c4, 3);
    c.expect(dp3.exact && dp3.value == 15, "dp-exact(C4,3) = 15");
    DpSearchResult dp2 = dp_exact(c4, 2);
    c.expect(dp2.exact && dp2.value == 0, "dp-exact(C4,2) = 0");
    SplitEdgeBound sb = split_edge_bound(c4, 0, 3, &cache);
    c.expect(sb.value == ExactRational(BigInt(15)), "split-edge value at k=3 is 15");

    std::string bin = tool_env("HYPERCHROMA_BIN");
    c.expect(!bin.empty(), "HYPERCHROMA_BIN is set (run via ctest)");
    if (!bin.empty()) {
        fs::path dir = temp_dir();
        fs::path witness = dir / "c4_witness.json";
        fs::path out = dir / "dp_exact.out";
        int code = run_tool(bin, "dp-exact --gen cycle:2:4 --k 3 --emit-witness " +
                                     witness.string(), out);
        c.expect(code == 0, "dp-exact exits 0");
        c.expect(slurp(out).find("dp-exact = 15") != std::string::npos, "dp-exact prints 15");
        fs::path count_out = dir / "dp_count.out";
        code = run_tool(bin, "dp-count --gen cycle:2:4 --cover " + witness.string(), count_out);
        c.expect(code == 0, "dp-count exits 0");
        c.expect(slurp(count_out).find("count = 15") != std::string::npos,
                 "witness cover replays to 15");
    }
}

TEST_CASE("criterion 3: 3-uniform 4-cycle against the closed-form bound") {
    Criterion c(3, "3-uniform 4-cycle: difference k-1, threshold 2, 82 vs 81, search <= 81");
    ChromaticCache cache;
    Hypergraph h = gen_linear_cycle(3, 4);
    IntPolynomial p = chromatic_polynomial(h, &cache);
    c.expect(p == poly({0, 1, -4, 0, 6, 0, -4, 0, 1}), "P = k^8-4k^6+6k^4-4k^2+k");
    UniformBoundPoly bound = uniform_upper_bound_poly(h);
    c.expect(bound.k_shift == 0, "integral bound");
    c.expect(bound.num == poly({1, 0, -4, 0, 6, 0, -4, 0, 1}), "bound = (k^2-1)^4");
    IntPolynomial diff = p - bound.num;
    c.expect(diff == poly({-1, 1}), "difference = k - 1");
    SignThreshold st = sign_threshold(diff);
    c.expect(st.sign == 1 && *st.threshold == BigInt(2), "threshold N = 2");
    c.expect(p.evaluate(2) == BigInt(82), "P(2) = 82");
    c.expect(bound.num.evaluate(2) == BigInt(81), "bound(2) = 81");
    UpperSearchResult up = dp_upper_search(h, 2, UpperStrategy::shifts, 4096);
    c.expect(up.value <= 81, "shift-family search finds a cover with count <= 81");
    GirthExpansion ge = girth_expansion(h, &cache);
    c.expect(ge.residual == IntPolynomial::zero(), "girth expansion residual = 0");
    VerificationReport rep = verify_even_girth(h, "cycle:3:4", &cache);
    c.expect(rep.status == VerificationReport::Status::verified, "claim verifier agrees");
}

TEST_CASE("criterion 4: even-edge certificates") {
    Criterion c(4, "even edge girth deficits: -k(k-1), +k(k-1), -k^2(k-1), statuses");
    ChromaticCache cache;
    Hypergraph c4 = gen_linear_cycle(2, 4);
    c.expect(even_cycle_deficit(c4, 0, &cache).delta == poly({0, 1, -1}), "C4 delta = -k(k-1)");
    Hypergraph k3 = gen_linear_cycle(2, 3);
    c.expect(even_cycle_deficit(k3, 0, &cache).delta == poly({0, -1, 1}), "K3 delta = +k(k-1)");
    Hypergraph mixed = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}, {1, 2}});
    std::size_t e = *mixed.find_edge({1, 2, 3});
    c.expect(even_cycle_deficit(mixed, e, &cache).delta == poly({0, 0, 1, -1}),
             "pendant pair delta = -k^2(k-1)");
    c.expect(verify_even_edge(c4, 0, "cycle:2:4", &cache).status ==
                 VerificationReport::Status::verified,
             "C4 verified");
    c.expect(verify_even_edge(mixed, e, "pendant", &cache).status ==
                 VerificationReport::Status::verified,
             "pendant pair verified");
    VerificationReport kr = verify_even_edge(k3, 0, "cycle:2:3", &cache);
    c.expect(kr.status == VerificationReport::Status::inconclusive &&
                 kr.reason == "hypothesis-unmet",
             "K3 hypothesis unmet");
}

TEST_CASE("criterion 5: hypertree rigidity") {
    Criterion c(5, "r=3 hypertrees, m <= 2: exhaustive DP value equals P");
    ChromaticCache cache;
    for (int m = 1; m <= 2; ++m)
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL})
            for (int k : {2, 3}) {
                Hypergraph tree = gen_hypertree(3, m, seed);
                DpSearchResult dp = dp_exact(tree, k);
                c.expect(dp.exact, "search exhausts the family");
                c.expect(BigInt(static_cast<long long>(dp.value)) ==
                             chromatic_polynomial(tree, &cache).evaluate(k),
                         "dp value equals P");
            }
    Hypergraph tree = gen_hypertree(3, 2, 3);
    DpSearchResult dp = dp_exact(tree, 2);
    c.expect(dp.value == 18, "m=2, k=2 value is 18");
}

TEST_CASE("criterion 6: shipped apex example golden test") {
    Criterion c(6, "shipped apex cover: levels (no, yes, no) and exact level decomposition");
    NamedHypergraph nh =
        parse_hypergraph_file(std::string(HYPERCHROMA_DATA_DIR) + "/apex_example.hg");
    std::ifstream cf(std::string(HYPERCHROMA_DATA_DIR) + "/apex_example.cover.json");
    c.expect(cf.good(), "cover file present");
    Cover cover = cover_from_json(nh.h, Json::parse(cf), &nh.id_of);
    VertexId apex = nh.id_of.at("w");
    std::vector<VertexId> base_verts;
    for (VertexId v : nh.h.vertices())
        if (v != apex) base_verts.push_back(v);
    std::vector<std::vector<VertexId>> base_edges;
    for (const auto& edge : nh.h.edges())
        if (!std::binary_search(edge.begin(), edge.end(), apex)) base_edges.push_back(edge);
    ApexCover ac = make_apex_cover(Hypergraph::from_edges(base_verts, base_edges), apex, nh.h,
                                   std::move(cover));
    c.expect(!level_mapping_check(ac, 1).is_level, "slice 1 is not a level mapping");
    c.expect(level_mapping_check(ac, 2).is_level, "slice 2 is a level mapping");
    c.expect(!level_mapping_check(ac, 3).is_level, "slice 3 is not a level mapping");
    ApexDecomposition dec = apex_decomposition(ac);
    c.expect(dec.sum_matches, "per-level counts sum to the brute-force total");
}

TEST_CASE("criterion 7: join identity across the corpus") {
    Criterion c(7, "P(H v K_p, k) = falling_factorial(p) * P(H, k-p) for p <= 3");
    ChromaticCache cache;
    auto corpus = oracle::corpus(200, 0xC0FFEE);
    for (const auto& h : corpus) {
        IntPolynomial base = chromatic_polynomial(h, &cache);
        for (int p = 1; p <= 3; ++p) {
            IntPolynomial lhs = chromatic_polynomial(join_clique(h, p).joined, &cache);
            IntPolynomial rhs = falling_factorial(p) * base.shift_argument(BigInt(-p));
            c.expect(lhs == rhs, "join identity as exact polynomials");
            if (lhs != rhs) return;  // avoid flooding the log
        }
    }
    Hypergraph c4 = gen_linear_cycle(2, 4);
    c.expect(chromatic_polynomial(join_clique(c4, 1).joined, &cache).evaluate(4) == BigInt(72),
             "P(C4 v K1, 4) = 72");
}

TEST_CASE("criterion 8: cover counting oracles") {
    Criterion c(8, "brute == inclusion-exclusion, natural == proper count, gauge, saturation");
    oracle::TinyRng rng(0xACCE);
    int sampled = 0;
    while (sampled < 100) {
        Hypergraph h = oracle::random_hypergraph(rng, 6, 4);
        int k = 2 + static_cast<int>(rng.below(2));
        // random sub-family of a random perfect spec
        PermCoverSpec spec = PermCoverSpec::identity(h, k);
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            for (std::size_t pos = 1; pos < h.edge(e).size(); ++pos) {
                auto& perm = spec.perms[e][pos];
                for (std::size_t i = perm.size(); i > 1; --i)
                    std::swap(perm[i - 1], perm[rng.below(i)]);
            }
        Cover full = expand_spec(h, spec);
        Cover f;
        f.k = k;
        f.per_edge.resize(h.edge_count());
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            std::size_t keep = rng.below(static_cast<std::uint64_t>(k) + 1);
            for (std::size_t i = 0; i < keep; ++i) f.per_edge[e].push_back(full.per_edge[e][i]);
        }
        ++sampled;
        std::uint64_t brute = count_colorings_brute(h, f);
        c.expect(brute == count_colorings_ie(h, f), "brute == inclusion-exclusion");
        c.expect(count_colorings_brute(h, natural_cover(h, k)) == chromatic_brute_count(h, k),
                 "natural cover count == proper coloring count");
        std::vector<std::vector<int>> gauge(h.vertex_count());
        for (auto& g : gauge) {
            g.resize(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) g[static_cast<std::size_t>(i)] = i + 1;
            for (std::size_t i = g.size(); i > 1; --i) std::swap(g[i - 1], g[rng.below(i)]);
        }
        c.expect(count_colorings_brute(h, apply_vertex_gauge(h, f, gauge)) == brute,
                 "gauge invariance");
        c.expect(count_colorings_brute(h, saturate(h, f)) <= brute, "saturation is monotone");
    }
}

TEST_CASE("criterion 9: exhaustive apex-cover bijection check at k = 2") {
    Criterion c(9, "K_1 v 3-edge, k=2: qualifying covers all count P; violations emit witnesses");
    Hypergraph single = Hypergraph::from_edges({1, 2, 3}, {{1, 2, 3}});
    VerificationReport rep = verify_apex_bijection(single, 2, "edge3");
    c.expect(rep.payload["exhaustive"] == true, "full enumeration");
    c.expect(rep.payload["qualifying_covers"].get<std::uint64_t>() >= 1, "qualifying covers seen");
    if (rep.status == VerificationReport::Status::violated)
        std::printf("counterexample: %s\n", rep.payload["counterexample"].dump(2).c_str());
    c.expect(rep.status == VerificationReport::Status::verified,
             "every qualifying cover counts P");
}

TEST_CASE("criterion 10: audit determinism and fault sensitivity") {
    Criterion c(10, "audit: byte-identical reruns, injected bound fault flagged with exit 1");
    std::string bin = tool_env("HYPERCHROMA_BIN");
    std::string faulty = tool_env("HYPERCHROMA_FAULTY_BIN");
    c.expect(!bin.empty() && !faulty.empty(), "tool paths in environment (run via ctest)");
    if (bin.empty() || faulty.empty()) return;
    fs::path dir = temp_dir();
    fs::path r1 = dir / "audit1.json";
    fs::path r2 = dir / "audit2.json";
    fs::path log = dir / "audit.log";
    int code1 = run_tool(bin, "verify audit --seed 5 --format json --out " + r1.string(), log);
    int code2 = run_tool(bin, "verify audit --seed 5 --format json --out " + r2.string(), log);
    c.expect(code1 == 0, "audit exits 0");
    c.expect(code2 == 0, "second audit exits 0");
    std::string a = slurp(r1), b = slurp(r2);
    c.expect(!a.empty() && a == b, "byte-identical reports across runs");
    fs::path rf = dir / "audit_faulty.json";
    int fault_code =
        run_tool(faulty, "verify audit --seed 5 --format json --out " + rf.string(), log);
    c.expect(fault_code == 1, "faulty build exits 1");
    std::string fr = slurp(rf);
    c.expect(fr.find("\"violated\"") != std::string::npos,
             "counterexample report present in the faulty audit");
}
