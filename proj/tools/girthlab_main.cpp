// Command-line front end: constants/certify for the numeric machinery and
// graph subcommands (gen/girth/find-cycle/stats/audit/fas) over edge-list
// files. Exit codes: 0 success or certified, 1 semantic failure (failed
// certificate, strict audit violation), 2 usage or parse error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "girthlab/constants.hpp"
#include "girthlab/cycles.hpp"
#include "girthlab/digraph.hpp"
#include "girthlab/edge_stats.hpp"
#include "girthlab/feedback_arc.hpp"
#include "girthlab/generators.hpp"
#include "girthlab/graph_io.hpp"
#include "girthlab/report.hpp"

namespace {

using girthlab::Digraph;
using girthlab::Error;
using girthlab::ErrorCode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

struct LoadedGraph {
    Digraph graph;
    std::string digest;
    std::string source;
};

LoadedGraph load_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::ParseError, "cannot open file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return {girthlab::parse_edge_list_string(text), girthlab::fnv1a_hex(text),
            path};
}

json graph_inputs(const LoadedGraph& g) {
    return {{"file", g.source},
            {"digest", g.digest},
            {"n", g.graph.n()},
            {"edges", g.graph.edge_count()}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int threads_default() {
    if (const char* env = std::getenv("GIRTHLAB_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0)
            return parsed;
    }
    return 1;
}

std::pair<int, int> parse_m_range(const std::string& spec) {
    auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            int m = std::stoi(spec);
            return {m, m};
        }
        return {std::stoi(spec.substr(0, dots)),
                std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadArgument, "bad m range: " + spec);
    }
}

std::string fmt(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

std::string fmt_opt(const std::optional<double>& value) {
    return value ? fmt(*value) : "-";
}

int cmd_constants(const std::string& range, bool as_json) {
    auto [lo, hi] = parse_m_range(range);
    if (lo < 3)
        throw Error(ErrorCode::BadArgument, "m must be >= 3");
    auto rows = girthlab::constants::bound_table(lo, hi);
    if (as_json) {
        json payload = json::array();
        for (const auto& row : rows)
            payload.push_back(girthlab::to_json(row));
        emit(girthlab::make_report("constants", {{"m_from", lo}, {"m_to", hi}},
                                   std::move(payload)));
        return kExitOk;
    }
    std::cout << "m\talpha\tresidual\tc\tbeta\ta\tb\ttau_star\tlambert\t"
                 "shen_general\tshen_large\tbest\n";
    for (const auto& row : rows) {
        std::cout << row.m << '\t' << fmt(row.alpha) << '\t'
                  << fmt(row.alpha_residual) << '\t' << fmt(row.c) << '\t'
                  << fmt_opt(row.beta_paper) << '\t' << fmt_opt(row.a) << '\t'
                  << fmt_opt(row.b) << '\t' << fmt_opt(row.tau_star) << '\t'
                  << fmt(row.lambert_bound) << '\t' << fmt_opt(row.shen_general)
                  << '\t' << fmt_opt(row.shen_large) << '\t' << row.best_known
                  << '\n';
    }
    return kExitOk;
}

int cmd_certify(int theorem, int m, std::optional<double> alpha_override,
                std::int64_t grid, double tol, bool search, bool as_json) {
    namespace consts = girthlab::constants;
    consts::Certificate cert;
    json inputs{{"theorem", theorem}, {"m", m}};
    if (theorem == 1) {
        (void)tol;
        cert = consts::certify_theorem1(m);
        if (alpha_override) {
            // Evaluate the contradiction at the supplied alpha instead.
            cert.alpha_used = *alpha_override;
            cert.certified =
                consts::theorem1_contradiction_holds(m, *alpha_override);
            cert.residual_at_alpha = consts::alpha_residual(m, *alpha_override);
            cert.notes = "caller-supplied alpha";
            inputs["alpha"] = *alpha_override;
        }
    } else if (theorem == 2) {
        double alpha_used;
        if (alpha_override) {
            alpha_used = *alpha_override;
            inputs["alpha"] = *alpha_override;
        } else {
            auto beta = consts::beta_paper(m);
            if (!beta)
                throw Error(ErrorCode::BadArgument,
                            "theorem 2 covers 3 <= m <= 8");
            alpha_used = *beta;
        }
        inputs["grid"] = grid;
        cert = consts::certify_theorem2(m, alpha_used, grid);
    } else {
        throw Error(ErrorCode::BadArgument, "--theorem must be 1 or 2");
    }

    json payload = girthlab::to_json(cert);
    if (search && theorem == 2) {
        // Derived, not a published-table value.
        payload["smallest_certified_alpha"] =
            consts::smallest_certified_alpha(m);
        payload["smallest_certified_alpha_origin"] = "derived, not paper";
    }
    if (as_json) {
        emit(girthlab::make_report("certify", std::move(inputs),
                                   std::move(payload)));
    } else {
        std::cout << "theorem " << theorem << " m=" << m
                  << " alpha=" << fmt(cert.alpha_used) << " -> "
                  << (cert.certified ? "certified" : "failed") << "\n";
        if (theorem == 2)
            std::cout << "tau_star=" << fmt(cert.tau_star)
                      << " max_g=" << fmt(cert.max_g)
                      << " grid=" << cert.grid_points << "\n";
        if (payload.contains("smallest_certified_alpha"))
            std::cout << "smallest certified alpha (derived, not paper): "
                      << fmt(payload["smallest_certified_alpha"].get<double>())
                      << "\n";
    }
    return cert.certified ? kExitOk : kExitSemantic;
}

int cmd_gen(const girthlab::GenSpec& spec) {
    Digraph d = girthlab::generate(spec);
    girthlab::serialize_edge_list(d, std::cout);
    return kExitOk;
}

int cmd_girth(const std::string& file, int threads, bool as_json) {
    LoadedGraph loaded = load_graph(file);
    auto witness = girthlab::shortest_cycle(loaded.graph, threads);
    if (as_json) {
        json payload;
        payload["girth"] = witness ? json(witness->length()) : json(nullptr);
        payload["witness"] =
            witness ? girthlab::to_json(*witness) : json(nullptr);
        emit(girthlab::make_report("girth", graph_inputs(loaded),
                                   std::move(payload)));
        return kExitOk;
    }
    if (!witness) {
        std::cout << "acyclic\n";
    } else {
        std::cout << "girth " << witness->length() << "\n";
        std::cout << "cycle";
        for (int v : witness->vertices)
            std::cout << ' ' << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_find_cycle(const std::string& file, int m, std::optional<double> alpha,
                   bool as_json) {
    LoadedGraph loaded = load_graph(file);
    double alpha_used = alpha ? *alpha : girthlab::constants::alpha(m);
    auto result =
        girthlab::find_short_cycle_constructive(loaded.graph, m, alpha_used);
    // Cross-check the constructive witness against the BFS oracle.
    if (!girthlab::validate_witness(loaded.graph, result.witness))
        throw Error(ErrorCode::InternalContradiction,
                    "constructive witness failed edge validation");
    auto oracle = girthlab::girth(loaded.graph);
    if (!oracle || *oracle > result.witness.length())
        throw Error(ErrorCode::InternalContradiction,
                    "constructive witness shorter than the BFS girth");
    if (as_json) {
        json payload{{"witness", girthlab::to_json(result.witness)},
                     {"recursion_depth", result.recursion_depth},
                     {"alpha", alpha_used},
                     {"m", m},
                     {"bfs_girth", *oracle}};
        emit(girthlab::make_report("find-cycle", graph_inputs(loaded),
                                   std::move(payload)));
        return kExitOk;
    }
    std::cout << "cycle length " << result.witness.length() << " (depth "
              << result.recursion_depth << ", "
              << girthlab::to_string(result.witness.provenance) << ")\n";
    std::cout << "cycle";
    for (int v : result.witness.vertices)
        std::cout << ' ' << v;
    std::cout << "\n";
    return kExitOk;
}

int cmd_stats(const std::string& file, int threads, bool as_json,
              bool per_edge) {
    LoadedGraph loaded = load_graph(file);
    auto stats = girthlab::compute_edge_stats(loaded.graph, threads);
    if (as_json) {
        json payload{{"global", girthlab::to_json(stats.global)}};
        if (per_edge) {
            json edges = json::array();
            for (std::size_t i = 0; i < stats.edges.size(); ++i)
                edges.push_back({{"u", stats.edges[i].first},
                                 {"v", stats.edges[i].second},
                                 {"p", stats.p[i]},
                                 {"q", stats.q[i]},
                                 {"t", stats.t[i]},
                                 {"f", stats.f[i]}});
            payload["edges"] = std::move(edges);
        }
        emit(girthlab::make_report("stats", graph_inputs(loaded),
                                   std::move(payload)));
        return kExitOk;
    }
    const auto& g = stats.global;
    std::cout << "n\t" << loaded.graph.n() << "\nedges\t"
              << loaded.graph.edge_count() << "\nT\t" << g.transitive_triangles
              << "\ntau\t" << (g.tau ? fmt(*g.tau) : "-") << "\nout2claws\t"
              << g.out2claws << "\nsum_f_vertex\t" << g.sum_f_vertex
              << "\nsum_indegree_sq\t" << g.sum_indegree_sq << "\n";
    if (per_edge) {
        std::cout << "u\tv\tp\tq\tt\tf\n";
        for (std::size_t i = 0; i < stats.edges.size(); ++i)
            std::cout << stats.edges[i].first << '\t' << stats.edges[i].second
                      << '\t' << stats.p[i] << '\t' << stats.q[i] << '\t'
                      << stats.t[i] << '\t' << stats.f[i] << '\n';
    }
    return kExitOk;
}

int cmd_audit(const std::string& which, const std::string& file, int m,
              std::optional<double> alpha, bool strict, bool as_json) {
    namespace consts = girthlab::constants;
    LoadedGraph loaded = load_graph(file);
    double alpha_used = alpha ? *alpha : consts::alpha(m);
    girthlab::AuditReport report;
    if (which == "lemma1") {
        report = girthlab::audit_lemma1(loaded.graph, alpha_used, m);
    } else if (which == "lemma3") {
        report = girthlab::audit_lemma3(loaded.graph, alpha_used, m);
    } else if (which == "lemma45") {
        auto [a, b] = consts::ab(m, alpha_used);
        (void)a;
        report = girthlab::audit_lemma45(loaded.graph, m, b);
    } else if (which == "lemma6") {
        report =
            girthlab::audit_lemma6(loaded.graph, alpha_used, m, consts::c(m));
    } else {
        throw Error(ErrorCode::BadArgument,
                    "audit subcommand must be lemma1|lemma3|lemma45|lemma6");
    }
    if (as_json) {
        json inputs = graph_inputs(loaded);
        inputs["m"] = m;
        inputs["alpha"] = alpha_used;
        emit(girthlab::make_report("audit", std::move(inputs),
                                   girthlab::to_json(report)));
    } else {
        std::cout << "audit " << report.inequality_id << " m=" << m
                  << " alpha=" << fmt(alpha_used) << "\n";
        std::cout << "item\tlhs\trhs\tslack\n";
        for (const auto& item : report.items) {
            std::string key =
                !item.label.empty()
                    ? item.label
                    : (item.u >= 0 ? "(" + std::to_string(item.u) + "," +
                                         std::to_string(item.v) + ")"
                                   : "v=" + std::to_string(item.v));
            std::cout << key << '\t' << fmt(item.lhs) << '\t'
                      << (item.defined ? fmt(item.rhs) : "undefined") << '\t'
                      << fmt(item.slack) << '\n';
        }
        std::cout << "verdict\t" << (report.all_hold ? "all-hold" : "violated")
                  << "\n";
    }
    if (strict && !report.all_hold)
        return kExitSemantic;
    return kExitOk;
}

int cmd_fas(const std::string& file, std::optional<int> m, bool sullivan,
            bool strict, bool as_json) {
    namespace consts = girthlab::constants;
    LoadedGraph loaded = load_graph(file);
    girthlab::FasResult fas = loaded.graph.n() <= girthlab::kBetaExactMaxN
                                  ? girthlab::beta_exact(loaded.graph)
                                  : girthlab::beta_heuristic(loaded.graph);
    json payload{{"fas", girthlab::to_json(fas)}};
    bool violated = false;
    std::optional<girthlab::Fact1Report> fact1;
    std::optional<girthlab::Lemma2Report> lemma2;
    std::optional<girthlab::SullivanReport> sull;
    if (m) {
        double cm = consts::c(*m);
        fact1 = girthlab::check_fact1(loaded.graph, *m, cm);
        lemma2 = girthlab::check_lemma2(loaded.graph, *m, cm);
        payload["fact1"] = girthlab::to_json(*fact1);
        payload["lemma2"] = girthlab::to_json(*lemma2);
        violated = fact1->status == girthlab::CheckStatus::Violated ||
                   !lemma2->holds;
        if (sullivan) {
            sull = girthlab::sullivan_ratio(loaded.graph, *m);
            payload["sullivan"] = girthlab::to_json(*sull);
        }
    }
    if (as_json) {
        json inputs = graph_inputs(loaded);
        if (m)
            inputs["m"] = *m;
        emit(girthlab::make_report("fas", std::move(inputs),
                                   std::move(payload)));
    } else {
        std::cout << "beta " << fas.beta
                  << (fas.exact ? " (exact)" : " (heuristic)") << "\norder";
        for (int v : fas.order)
            std::cout << ' ' << v;
        std::cout << "\nremoved";
        for (const auto& [u, v] : fas.removed)
            std::cout << " (" << u << "," << v << ")";
        std::cout << "\n";
        if (fact1)
            std::cout << "fact1 beta=" << fact1->beta
                      << " bound=" << fmt(fact1->bound) << " -> "
                      << to_string(fact1->status) << "\n";
        if (lemma2)
            std::cout << "lemma2 min_outdeg=" << lemma2->min_outdeg
                      << " (vertex " << lemma2->witness_vertex
                      << ") bound=" << fmt(lemma2->bound) << " -> "
                      << (lemma2->holds ? "holds" : "violated") << "\n";
        if (sull)
            std::cout << "sullivan ratio=" << fmt(sull->ratio)
                      << " conjectured=" << fmt(sull->conjectured)
                      << " (diagnostic only)\n";
    }
    if (strict && violated)
        return kExitSemantic;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Short-cycle bounds workbench: certified constants, "
                 "constructive cycle finding, and counting audits for "
                 "digon-free digraphs"};
    app.require_subcommand(1);
    app.fallthrough(); // let --threads trail the subcommand
    int threads = threads_default();
    app.add_option("--threads", threads,
                   "parallelism cap (env GIRTHLAB_THREADS)");

    // constants
    std::string m_range = "3..8";
    bool constants_json = false;
    auto* constants_cmd =
        app.add_subcommand("constants", "bound table for a range of m");
    constants_cmd->add_option("--m", m_range, "single m or range A..B");
    constants_cmd->add_flag("--json", constants_json, "JSON report");

    // certify
    int theorem = 1, certify_m = 3;
    double certify_alpha = -1.0, certify_tol = 1e-9;
    std::int64_t grid = girthlab::constants::kDefaultGrid;
    bool certify_json = false, certify_search = false;
    auto* certify_cmd = app.add_subcommand("certify", "theorem certification");
    certify_cmd->add_option("--theorem", theorem, "1 or 2")->required();
    certify_cmd->add_option("--m", certify_m, "cycle-length budget")->required();
    certify_cmd->add_option("--alpha", certify_alpha, "override alpha");
    certify_cmd->add_option("--grid", grid, "grid points for theorem 2");
    certify_cmd->add_option("--tol", certify_tol, "root offset for theorem 1");
    certify_cmd->add_flag("--search", certify_search,
                          "also report smallest certifiable alpha (derived)");
    certify_cmd->add_flag("--json", certify_json, "JSON report");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a digraph");
    gen_cmd->require_subcommand(1);
    int gen_n = 0, gen_r = 0, gen_m = 3;
    double gen_density = 1.0;
    std::uint64_t gen_seed = 0;
    std::string offsets_arg;
    auto* gen_circ = gen_cmd->add_subcommand("circulant", "circulant digraph");
    gen_circ->add_option("--n", gen_n, "vertices")->required();
    gen_circ->add_option("--offsets", offsets_arg, "comma-separated offsets")
        ->required();
    auto* gen_outreg =
        gen_cmd->add_subcommand("outregular", "random r-outregular digraph");
    gen_outreg->add_option("--n", gen_n, "vertices")->required();
    gen_outreg->add_option("--r", gen_r, "outdegree")->required();
    gen_outreg->add_option("--seed", gen_seed, "rng seed");
    auto* gen_mfree = gen_cmd->add_subcommand("mfree", "random m-free digraph");
    gen_mfree->add_option("--n", gen_n, "vertices")->required();
    gen_mfree->add_option("--m", gen_m, "girth floor")->required();
    gen_mfree->add_option("--density", gen_density, "target density in [0,1]");
    gen_mfree->add_option("--seed", gen_seed, "rng seed");
    auto* gen_tt = gen_cmd->add_subcommand("tournament", "transitive tournament");
    gen_tt->add_option("--n", gen_n, "vertices")->required();

    // girth
    std::string girth_file;
    bool girth_json = false;
    auto* girth_cmd = app.add_subcommand("girth", "exact girth with witness");
    girth_cmd->add_option("file", girth_file, "edge list ('-' = stdin)")
        ->required();
    girth_cmd->add_flag("--json", girth_json, "JSON report");

    // find-cycle
    std::string find_file;
    int find_m = 3;
    double find_alpha = -1.0;
    bool find_json = false;
    auto* find_cmd = app.add_subcommand(
        "find-cycle", "constructive short-cycle finder (length <= m)");
    find_cmd->add_option("file", find_file, "edge list ('-' = stdin)")
        ->required();
    find_cmd->add_option("--m", find_m, "cycle-length budget")->required();
    find_cmd->add_option("--alpha", find_alpha,
                         "outdegree fraction (default: alpha(m))");
    find_cmd->add_flag("--json", find_json, "JSON report");

    // stats
    std::string stats_file;
    bool stats_json = false, stats_edges = false;
    auto* stats_cmd = app.add_subcommand("stats", "edge/vertex counting stats");
    stats_cmd->add_option("file", stats_file, "edge list ('-' = stdin)")
        ->required();
    stats_cmd->add_flag("--json", stats_json, "JSON report");
    stats_cmd->add_flag("--per-edge", stats_edges, "include per-edge table");

    // audit
    std::string audit_which, audit_file;
    int audit_m = 3;
    double audit_alpha = -1.0;
    bool audit_strict = false, audit_json = false;
    auto* audit_cmd =
        app.add_subcommand("audit", "per-edge/per-vertex inequality audits");
    audit_cmd->add_option("which", audit_which, "lemma1|lemma3|lemma45|lemma6")
        ->required();
    audit_cmd->add_option("file", audit_file, "edge list ('-' = stdin)")
        ->required();
    audit_cmd->add_option("--m", audit_m, "cycle-length budget")->required();
    audit_cmd->add_option("--alpha", audit_alpha,
                          "outdegree fraction (default: alpha(m))");
    audit_cmd->add_flag("--strict", audit_strict, "exit 1 on violation");
    audit_cmd->add_flag("--json", audit_json, "JSON report");

    // fas
    std::string fas_file;
    int fas_m = -1;
    bool fas_sullivan = false, fas_strict = false, fas_json = false;
    auto* fas_cmd =
        app.add_subcommand("fas", "minimum feedback arc set (+ m-free checks)");
    fas_cmd->add_option("file", fas_file, "edge list ('-' = stdin)")->required();
    fas_cmd->add_option("--m", fas_m, "run Fact 1 / Lemma 2 checks for this m");
    fas_cmd->add_flag("--sullivan", fas_sullivan,
                      "report the diagnostic conjecture ratio");
    fas_cmd->add_flag("--strict", fas_strict, "exit 1 on violated checks");
    fas_cmd->add_flag("--json", fas_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (constants_cmd->parsed())
            return cmd_constants(m_range, constants_json);
        if (certify_cmd->parsed()) {
            std::optional<double> alpha_override;
            if (certify_cmd->count("--alpha"))
                alpha_override = certify_alpha;
            return cmd_certify(theorem, certify_m, alpha_override, grid,
                               certify_tol, certify_search, certify_json);
        }
        if (gen_cmd->parsed()) {
            girthlab::GenSpec spec;
            spec.n = gen_n;
            spec.seed = gen_seed;
            if (gen_circ->parsed()) {
                spec.kind = girthlab::GenSpec::Kind::Circulant;
                std::stringstream ss(offsets_arg);
                std::string token;
                while (std::getline(ss, token, ','))
                    spec.offsets.push_back(std::stoi(token));
            } else if (gen_outreg->parsed()) {
                spec.kind = girthlab::GenSpec::Kind::OutregularRandom;
                spec.r = gen_r;
            } else if (gen_mfree->parsed()) {
                spec.kind = girthlab::GenSpec::Kind::MfreeRandom;
                spec.m = gen_m;
                spec.density = gen_density;
            } else {
                spec.kind = girthlab::GenSpec::Kind::TransitiveTournament;
            }
            return cmd_gen(spec);
        }
        if (girth_cmd->parsed())
            return cmd_girth(girth_file, threads, girth_json);
        if (find_cmd->parsed()) {
            std::optional<double> alpha_override;
            if (find_cmd->count("--alpha"))
                alpha_override = find_alpha;
            return cmd_find_cycle(find_file, find_m, alpha_override, find_json);
        }
        if (stats_cmd->parsed())
            return cmd_stats(stats_file, threads, stats_json, stats_edges);
        if (audit_cmd->parsed()) {
            std::optional<double> alpha_override;
            if (audit_cmd->count("--alpha"))
                alpha_override = audit_alpha;
            return cmd_audit(audit_which, audit_file, audit_m, alpha_override,
                             audit_strict, audit_json);
        }
        if (fas_cmd->parsed()) {
            std::optional<int> m_opt;
            if (fas_cmd->count("--m"))
                m_opt = fas_m;
            return cmd_fas(fas_file, m_opt, fas_sullivan, fas_strict, fas_json);
        }
    } catch (const Error& e) {
        std::cerr << "error [" << girthlab::to_string(e.code())
                  << "]: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::BadArgument:
            case ErrorCode::ParseError:
            case ErrorCode::VertexOutOfRange:
                return kExitUsage;
            default:
                return kExitSemantic;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
