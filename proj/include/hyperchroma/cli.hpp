#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperchroma/covers.hpp"
#include "hyperchroma/generators.hpp"
#include "hyperchroma/harness.hpp"
#include "hyperchroma/io.hpp"

namespace hyperchroma::cli {

// exit codes: 0 ok/verified, 1 violation found, 2 inconclusive (budget),
// 64 usage, 65 bad input data, 66 missing/unreadable file, 70 internal
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct CommonOptions {
    std::string gen_spec;
    std::string file;
    bool infer_vertices = false;
    long long k = 0;
    std::string k_range;  // "a:b"
    std::string format = "markdown";
    std::string out_path;
    std::string cache_path;
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t budget_assignments = 100'000'000ULL;
    std::uint64_t budget_covers = 2'000'000ULL;
    std::uint64_t budget_ie = 50'000'000ULL;
    std::size_t max_expansion_edges = 20;
};

inline void add_instance_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--gen", opt.gen_spec,
                    "generator spec: cycle:R:LEN | hypertree:R:M[:SEED] | theta:R:L1:L2 | "
                    "complete:N[:singletons] | join:P:<inner>");
    cmd->add_option("--file", opt.file, "hypergraph text file");
    cmd->add_flag("--infer-vertices", opt.infer_vertices,
                  "derive the vertex set from the edges when vertices: is absent");
}

inline void add_run_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--format", opt.format, "markdown | csv | json")->default_val("markdown");
    cmd->add_option("--out", opt.out_path, "write the report to this file");
    cmd->add_option("--cache", opt.cache_path,
                    "chromatic cache file (HYPERCHROMA_CACHE overrides the default)");
    cmd->add_option("--seed", opt.seed, "seed for randomized searches")->default_val(1);
    cmd->add_option("--threads", opt.threads, "worker threads for the search kernels")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-assignments", opt.budget_assignments,
                    "max color assignments per brute-force count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-covers", opt.budget_covers, "max covers per exhaustive search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-ie", opt.budget_ie, "max nodes for inclusion-exclusion counting")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-expansion-edges", opt.max_expansion_edges,
                    "edge limit for the subset-expansion route")
        ->check(CLI::PositiveNumber);
}

struct InstanceLabel {
    NamedHypergraph nh;
    std::string label;
};

inline InstanceLabel resolve_instance(const CommonOptions& opt) {
    if (!opt.gen_spec.empty() && !opt.file.empty())
        throw CLI::ValidationError("--gen and --file are mutually exclusive");
    if (!opt.gen_spec.empty())
        return {with_numeric_names(generate_instance(opt.gen_spec)), opt.gen_spec};
    if (!opt.file.empty())
        return {parse_hypergraph_file(opt.file, opt.infer_vertices), "file:" + opt.file};
    throw CLI::ValidationError("an instance is required: pass --gen or --file");
}

inline std::vector<long long> resolve_k_range(const CommonOptions& opt,
                                              std::vector<long long> fallback = {2, 3, 4}) {
    if (opt.k != 0) return {opt.k};
    if (!opt.k_range.empty()) {
        std::size_t colon = opt.k_range.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--k-range expects A:B");
        long long a = std::stoll(opt.k_range.substr(0, colon));
        long long b = std::stoll(opt.k_range.substr(colon + 1));
        if (b < a || b - a > 64) throw CLI::ValidationError("--k-range must be a short A:B range");
        std::vector<long long> ks;
        for (long long k = a; k <= b; ++k) ks.push_back(k);
        return ks;
    }
    return fallback;
}

inline std::string cache_path(const CommonOptions& opt) {
    if (!opt.cache_path.empty()) return opt.cache_path;
    if (const char* env = std::getenv("HYPERCHROMA_CACHE")) return env;
    return "";
}

inline DpOptions dp_options(const CommonOptions& opt) {
    DpOptions d;
    d.cover_budget = opt.budget_covers;
    d.assignment_budget = opt.budget_assignments;
    d.threads = opt.threads;
    return d;
}

/// Writes the rendered report; stdout unless --out was given. Emission
/// happens once, after all computation.
inline void emit(const CommonOptions& opt, const std::string& text, std::ostream& out) {
    if (opt.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(opt.out_path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + opt.out_path);
    f << text;
}

inline std::string render_reports(const CommonOptions& opt,
                                  const std::vector<VerificationReport>& reports) {
    if (opt.format == "json") return reports_to_json(reports).dump(2) + "\n";
    if (opt.format == "csv") return reports_to_csv(reports);
    return reports_to_markdown(reports);
}

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"exact chromatic polynomials and DP color functions of hypergraphs"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string verify_claim;
    std::size_t edge_index = 0;
    bool edge_given = false;
    int join_p = 1;
    std::string cover_path;
    std::string apex_name;
    std::string pair_names;
    std::string method = "dc";
    std::string strategy = "shifts";
    std::uint64_t trials = 4096;
    std::string emit_witness;
    std::string gen_out;
    bool no_prune = false;

    CLI::App* chromatic = app.add_subcommand("chromatic", "chromatic polynomial and evaluations");
    add_instance_flags(chromatic, opt);
    add_run_flags(chromatic, opt);
    chromatic->add_option("--k", opt.k, "evaluate at a single k");
    chromatic->add_option("--k-range", opt.k_range, "evaluate at A..B");
    chromatic->add_option("--method", method, "dc | subset")->default_val("dc");

    CLI::App* girth_cmd = app.add_subcommand("girth", "girth, or the girth of one edge");
    add_instance_flags(girth_cmd, opt);
    add_run_flags(girth_cmd, opt);
    girth_cmd->add_option("--edge", edge_index, "edge index (normalized order)")
        ->each([&](const std::string&) { edge_given = true; });

    CLI::App* census_cmd = app.add_subcommand("census", "shortest-cycle census (z, t, witnesses)");
    add_instance_flags(census_cmd, opt);
    add_run_flags(census_cmd, opt);

    CLI::App* dp_count = app.add_subcommand("dp-count", "count colorings avoiding a cover file");
    add_instance_flags(dp_count, opt);
    add_run_flags(dp_count, opt);
    dp_count->add_option("--cover", cover_path, "cover JSON file")->required();
    dp_count->add_option("--method", method, "brute | ie | both")->default_val("brute");

    CLI::App* dp_exact_cmd = app.add_subcommand("dp-exact", "exact DP color function value");
    add_instance_flags(dp_exact_cmd, opt);
    add_run_flags(dp_exact_cmd, opt);
    dp_exact_cmd->add_option("--k", opt.k, "fold count")->required();
    dp_exact_cmd->add_option("--emit-witness", emit_witness, "write a minimizing cover here");
    dp_exact_cmd->add_flag("--no-prune", no_prune, "disable the symmetry-pruned search");

    CLI::App* dp_bounds = app.add_subcommand(
        "dp-bounds", "closed-form upper bound, split-edge cover values, and an upper search");
    add_instance_flags(dp_bounds, opt);
    add_run_flags(dp_bounds, opt);
    dp_bounds->add_option("--k", opt.k, "fold count")->required();
    dp_bounds->add_option("--strategy", strategy, "shifts | random")->default_val("shifts");
    dp_bounds->add_option("--trials", trials, "upper-search trial budget")->default_val(4096);

    CLI::App* verify = app.add_subcommand("verify", "run a claim verifier");
    verify->add_option("claim", verify_claim,
                       "gir1 | evencyc | lemma9 | join | level | lemma21 | lemma22 | "
                       "jointheorems | audit")
        ->required();
    add_instance_flags(verify, opt);
    add_run_flags(verify, opt);
    verify->add_option("--k", opt.k, "single k");
    verify->add_option("--k-range", opt.k_range, "A:B");
    verify->add_option("--edge", edge_index, "edge index for edge-local claims")
        ->each([&](const std::string&) { edge_given = true; });
    verify->add_option("--p", join_p, "join clique size")->default_val(1);
    verify->add_option("--cover", cover_path, "cover JSON file (level, lemma22)");
    verify->add_option("--apex", apex_name, "apex vertex name (level, lemma22)");
    verify->add_option("--pair", pair_names, "v1,v2 vertex names (lemma9)");
    std::string audit_claims;
    verify->add_option("--claims", audit_claims,
                       "comma-separated claim filter for the audit corpus");

    CLI::App* gen = app.add_subcommand("gen", "write a generated instance file");
    gen->add_option("--spec", opt.gen_spec, "generator spec")->required();
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");

    try {
        std::vector<const char*> argv;
        argv.push_back("hyperchroma");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ChromaticCache cache;
        std::string cpath = cache_path(opt);
        std::set<std::string> cache_on_disk;
        if (!cpath.empty()) cache_on_disk = load_cache_file(cpath, cache, err);
        auto save_cache = [&] {
            if (!cpath.empty()) append_cache_file(cpath, cache, cache_on_disk);
        };

        if (gen->parsed()) {
            NamedHypergraph nh = with_numeric_names(generate_instance(opt.gen_spec));
            std::string text = write_hypergraph(nh);
            if (gen_out.empty()) {
                out << text;
            } else {
                std::ofstream f(gen_out, std::ios::trunc);
                if (!f) throw std::runtime_error("cannot write " + gen_out);
                f << text;
            }
            return kExitOk;
        }

        if (chromatic->parsed()) {
            InstanceLabel inst = resolve_instance(opt);
            IntPolynomial p = method == "subset"
                                  ? chromatic_subset_expansion(inst.nh.h, opt.max_expansion_edges)
                                  : chromatic_polynomial(inst.nh.h, &cache);
            std::vector<long long> ks = resolve_k_range(opt, {2, 3});
            std::ostringstream text;
            Json j;
            j["instance"] = inst.label;
            j["coefficients_ascending"] = poly_to_json(p);
            Json evals = Json::array();
            text << "P = " << p.to_string() << "\n";
            text << "coefficients (ascending):";
            if (p.is_zero()) text << " 0";
            for (const auto& c : p.coefficients()) text << " " << c.to_string();
            text << "\n";
            for (long long k : ks) {
                BigInt v = p.evaluate(k);
                text << "P(" << k << ") = " << v.to_string() << "\n";
                Json e;
                e["k"] = k;
                e["value"] = v.to_string();
                evals.push_back(std::move(e));
            }
            j["evaluations"] = std::move(evals);
            save_cache();
            emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text.str(), out);
            return kExitOk;
        }

        if (girth_cmd->parsed()) {
            InstanceLabel inst = resolve_instance(opt);
            std::ostringstream text;
            Json j;
            j["instance"] = inst.label;
            if (edge_given) {
                EdgeGirth eg = girth_of_edge(inst.nh.h, edge_index);
                j["edge"] = edge_index;
                if (eg.length) {
                    j["edge_girth"] = *eg.length;
                    text << "edge " << edge_index << ": girth " << *eg.length << "\n";
                    Json wit;
                    Json vs = Json::array();
                    for (VertexId v : eg.witness->vertex_seq) vs.push_back(inst.nh.name(v));
                    wit["vertices"] = std::move(vs);
                    wit["edges"] = eg.witness->edge_seq;
                    j["witness"] = std::move(wit);
                } else {
                    j["edge_girth"] = "infinity";
                    text << "edge " << edge_index << ": no cycle through this edge\n";
                }
            } else {
                std::optional<int> g = girth(inst.nh.h);
                j["girth"] = g ? Json(*g) : Json("infinity");
                if (g)
                    text << "girth " << *g << "\n";
                else
                    text << "acyclic (girth infinity)\n";
            }
            emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text.str(), out);
            return kExitOk;
        }

        if (census_cmd->parsed()) {
            InstanceLabel inst = resolve_instance(opt);
            CycleCensus c = shortest_cycle_census(inst.nh.h);
            Json j;
            j["instance"] = inst.label;
            j["girth"] = c.length;
            j["shortest_cycle_count"] = c.count;
            j["witness_edge_sets"] = c.witnesses;
            std::ostringstream text;
            text << "girth " << c.length << ", " << c.count << " shortest cycle(s)\n";
            for (const auto& w : c.witnesses) {
                text << "  edges:";
                for (std::size_t e : w) text << " " << e;
                text << "\n";
            }
            emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text.str(), out);
            return kExitOk;
        }

        if (dp_count->parsed()) {
            InstanceLabel inst = resolve_instance(opt);
            std::ifstream cf(cover_path);
            if (!cf) throw ParseError(cover_path + ": cannot open file");
            Json cover_json = Json::parse(cf);
            Cover cover = cover_from_json(inst.nh.h, cover_json, &inst.nh.id_of);
            Json j;
            j["instance"] = inst.label;
            j["k"] = cover.k;
            std::ostringstream text;
            if (method == "brute" || method == "both") {
                std::uint64_t v =
                    count_colorings_brute(inst.nh.h, cover, opt.budget_assignments, opt.threads);
                j["count"] = v;
                text << "count = " << v << "\n";
            }
            if (method == "ie" || method == "both") {
                std::uint64_t v = count_colorings_ie(inst.nh.h, cover, opt.budget_ie);
                j["count_inclusion_exclusion"] = v;
                text << "count (inclusion-exclusion) = " << v << "\n";
            }
            emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text.str(), out);
            return kExitOk;
        }

        if (dp_exact_cmd->parsed()) {
            InstanceLabel inst = resolve_instance(opt);
            DpOptions dopts = dp_options(opt);
            dopts.gauge_prune = !no_prune;
            DpSearchResult res = dp_exact(inst.nh.h, static_cast<int>(opt.k), dopts);
            Json j;
            j["instance"] = inst.label;
            j["k"] = opt.k;
            j["value"] = res.value;
            j["exact"] = res.exact;
            j["covers_tried"] = res.covers_tried;
            j["covers_total"] = res.covers_total.to_string();
            bool cyclic = is_shift_spec(res.witness);
            j["witness_is_cyclic_shift"] = cyclic;
            std::ostringstream text;
            text << (res.exact ? "dp-exact = " : "dp upper bound (budget exceeded) = ")
                 << res.value << "\n";
            text << "covers tried: " << res.covers_tried << " of " << res.covers_total.to_string()
                 << "\n";
            text << "witness class: " << (cyclic ? "cyclic-shift cover" : "general permutation cover")
                 << "\n";
            if (!emit_witness.empty()) {
                Cover witness = expand_spec(inst.nh.h, res.witness);
                std::ofstream wf(emit_witness, std::ios::trunc);
                if (!wf) throw std::runtime_error("cannot write " + emit_witness);
                wf << cover_to_json(inst.nh.h, witness, &inst.nh.name_of).dump(2) << "\n";
                text << "witness cover written to " << emit_witness << "\n";
                j["witness_file"] = emit_witness;
            }
            emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text.str(), out);
            return res.exact ? kExitOk : kExitInconclusive;
        }

        if (dp_bounds->parsed()) {
            InstanceLabel inst = resolve_instance(opt);
            const Hypergraph& h = inst.nh.h;
            Json j;
            j["instance"] = inst.label;
            j["k"] = opt.k;
            std::ostringstream text;
            Classification cls = classify(h);
            if (cls.uniform_rank && h.edge_count() > 0) {
                ExactRational b = uniform_upper_bound(h, opt.k);
                j["uniform_bound"] = b.to_string();
                text << "uniform cover bound = " << b.to_string() << "\n";
            }
            Json split = Json::array();
            ChromaticCache cc;
            for (std::size_t e = 0; e < h.edge_count(); ++e) {
                std::size_t ne = h.edge(e).size();
                if (ne < 2 || components(delete_edge(h, e)).count() != ne - 1) continue;
                SplitEdgeBound sb = split_edge_bound(h, e, opt.k, &cc);
                Json row;
                row["edge"] = e;
                row["value"] = sb.value.to_string();
                row["branch"] = sb.attained_branch;
                split.push_back(std::move(row));
                text << "split-edge value at edge " << e << " = " << sb.value.to_string()
                     << " (branch " << sb.attained_branch << ")\n";
            }
            j["split_edge_values"] = std::move(split);
            UpperStrategy st = strategy == "random" ? UpperStrategy::random_perms
                                                    : UpperStrategy::shifts;
            UpperSearchResult up = dp_upper_search(h, static_cast<int>(opt.k), st, trials,
                                                   opt.seed, opt.budget_assignments, opt.threads);
            j["upper_search"] = up.value;
            j["upper_search_trials"] = up.tried;
            j["upper_search_exhausted_family"] = up.family_exhausted;
            text << "upper search (" << strategy << ") = " << up.value << " over " << up.tried
                 << " covers\n";
            emit(opt, opt.format == "json" ? j.dump(2) + "\n" : text.str(), out);
            return kExitOk;
        }

        if (verify->parsed()) {
            std::vector<VerificationReport> reports;
            DpOptions dopts = dp_options(opt);
            if (verify_claim == "audit") {
                AuditConfig cfg;
                cfg.seed = opt.seed;
                cfg.dp = dopts;
                cfg.assignment_budget = opt.budget_assignments;
                std::size_t start = 0;
                while (start < audit_claims.size()) {
                    std::size_t comma = audit_claims.find(',', start);
                    if (comma == std::string::npos) comma = audit_claims.size();
                    if (comma > start) cfg.claims.push_back(audit_claims.substr(start, comma - start));
                    start = comma + 1;
                }
                reports = run_audit(cfg);
            } else if (verify_claim == "gir1") {
                InstanceLabel inst = resolve_instance(opt);
                reports.push_back(verify_even_girth(inst.nh.h, inst.label, &cache));
            } else if (verify_claim == "evencyc") {
                InstanceLabel inst = resolve_instance(opt);
                std::size_t pick = edge_index;
                if (!edge_given) {
                    for (std::size_t e = 0; e < inst.nh.h.edge_count(); ++e) {
                        std::size_t ne = inst.nh.h.edge(e).size();
                        if (ne < 2) continue;
                        if (components(delete_edge(inst.nh.h, e)).count() != ne - 1) continue;
                        EdgeGirth eg = girth_of_edge(inst.nh.h, e);
                        if (eg.length && *eg.length % 2 == 0) {
                            pick = e;
                            break;
                        }
                    }
                }
                reports.push_back(verify_even_edge(inst.nh.h, pick, inst.label, &cache, dopts));
                reports.push_back(verify_split_edge_path(inst.nh.h, pick, resolve_k_range(opt),
                                                         inst.label, &cache, dopts));
            } else if (verify_claim == "lemma9") {
                InstanceLabel inst = resolve_instance(opt);
                std::optional<VertexId> v1, v2;
                if (!pair_names.empty()) {
                    std::size_t comma = pair_names.find(',');
                    if (comma == std::string::npos)
                        throw CLI::ValidationError("--pair expects v1,v2");
                    auto lookup = [&](const std::string& nm) {
                        auto it = inst.nh.id_of.find(nm);
                        if (it == inst.nh.id_of.end())
                            throw std::invalid_argument("unknown vertex name \"" + nm + "\"");
                        return it->second;
                    };
                    v1 = lookup(pair_names.substr(0, comma));
                    v2 = lookup(pair_names.substr(comma + 1));
                }
                reports.push_back(
                    audit_connecting_family(inst.nh.h, edge_index, v1, v2, inst.label, &cache));
            } else if (verify_claim == "join") {
                InstanceLabel inst = resolve_instance(opt);
                reports.push_back(verify_join_identity(inst.nh.h, join_p, resolve_k_range(opt),
                                                       inst.label, &cache));
            } else if (verify_claim == "level" || verify_claim == "lemma22") {
                InstanceLabel inst = resolve_instance(opt);
                if (cover_path.empty() || apex_name.empty())
                    throw CLI::ValidationError("--cover and --apex are required for this claim");
                auto apex_it = inst.nh.id_of.find(apex_name);
                if (apex_it == inst.nh.id_of.end())
                    throw std::invalid_argument("unknown apex name \"" + apex_name + "\"");
                VertexId apex = apex_it->second;
                std::ifstream cf(cover_path);
                if (!cf) throw ParseError(cover_path + ": cannot open file");
                Cover cover = cover_from_json(inst.nh.h, Json::parse(cf), &inst.nh.id_of);
                std::vector<VertexId> base_verts;
                for (VertexId v : inst.nh.h.vertices())
                    if (v != apex) base_verts.push_back(v);
                std::vector<std::vector<VertexId>> base_edges;
                for (const auto& e : inst.nh.h.edges())
                    if (!std::binary_search(e.begin(), e.end(), apex)) base_edges.push_back(e);
                Hypergraph base = Hypergraph::from_edges(base_verts, base_edges);
                ApexCover ac = make_apex_cover(base, apex, inst.nh.h, std::move(cover));
                if (verify_claim == "level")
                    reports.push_back(
                        verify_apex_levels(ac, inst.label, opt.budget_assignments));
                else
                    reports.push_back(verify_apex_level_bound(ac, inst.label, dopts));
            } else if (verify_claim == "lemma21") {
                InstanceLabel inst = resolve_instance(opt);
                long long k = opt.k != 0 ? opt.k : 2;
                reports.push_back(
                    verify_apex_bijection(inst.nh.h, static_cast<int>(k), inst.label, dopts));
            } else if (verify_claim == "jointheorems") {
                InstanceLabel inst = resolve_instance(opt);
                for (auto& rep : verify_join_theorems(inst.nh.h, join_p, resolve_k_range(opt),
                                                      inst.label, &cache, dopts))
                    reports.push_back(std::move(rep));
            } else {
                throw CLI::ValidationError("unknown claim \"" + verify_claim + "\"");
            }
            sort_reports(reports);
            save_cache();
            emit(opt, render_reports(opt, reports), out);
            return aggregate_exit(reports);
        }

        throw CLI::ValidationError("no subcommand");
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const BudgetExceeded& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace hyperchroma::cli
