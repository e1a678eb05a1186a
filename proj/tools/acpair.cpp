// acpair: search and audit anticomplete pairs in graphs and tournaments.
// Every subcommand reads graphs from a file or stdin and writes JSON to
// stdout. Exit codes: 0 found/pass, 1 sound not-found, 2 error.

#include "ac/campaign.hpp"
#include "ac/enumerate.hpp"
#include "ac/generators.hpp"
#include "ac/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ac::GraphError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ac::Graph load_graph(const std::string& path) { return ac::parse_graph(read_input(path)); }
ac::Tournament load_tournament(const std::string& path) { return ac::parse_tournament(read_input(path)); }

void emit(const ac::Json& j) { std::cout << j.dump(1) << "\n"; }

std::vector<int> parse_csv(const std::string& csv)
{
    std::vector<int> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back(std::stoi(tok));
    return out;
}

ac::VertexSet csv_set(const std::string& csv, std::size_t capacity)
{
    ac::Bitset b(capacity);
    for (int v : parse_csv(csv)) {
        if (v < 0 || static_cast<std::size_t>(v) >= capacity)
            throw ac::GraphError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(capacity - 1));
        b.set(static_cast<std::size_t>(v));
    }
    return b;
}

int cmd_rock(const std::string& graph_path, int p, bool heuristic, int cap)
{
    ac::Graph g = load_graph(graph_path);
    ac::RockCaps caps;
    if (cap > 0)
        caps.exact_max_n = cap;
    auto cert = heuristic ? ac::find_rock_heuristic(g, p) : ac::find_rock_exact(g, p, caps);
    if (!cert) {
        ac::Json j;
        j["schema_version"] = ac::kSchemaVersion;
        j["kind"] = "rock-search";
        j["outcome"] = "not-found";
        j["p"] = p;
        emit(j);
        return kExitNotFound;
    }
    emit(ac::rock_certificate_json(*cert));
    return kExitFound;
}

int cmd_peel(const std::string& graph_path, int p, int s, int cap)
{
    ac::Graph g = load_graph(graph_path);
    ac::RockCaps caps;
    if (cap > 0)
        caps.exact_max_n = cap;
    emit(ac::peel_result_json(ac::peel_rocks(g, p, s, caps)));
    return kExitFound;
}

int cmd_decompose(const std::string& graph_path, int q, const std::string& scope_csv)
{
    ac::Graph g = load_graph(graph_path);
    if (scope_csv.empty()) {
        emit(ac::matching_decomposition_json(ac::decompose(g, q)));
    } else {
        ac::VertexSet scope = csv_set(scope_csv, static_cast<std::size_t>(g.vertex_count()));
        emit(ac::matching_decomposition_json(ac::decompose(g, q, &scope)));
    }
    return kExitFound;
}

int cmd_partition(const std::string& graph_path, const std::string& variant, int p, long long threshold,
    std::uint64_t seed, int max_tries, int sampled, const std::string& a_csv, const std::string& x_csv,
    long long family_cap)
{
    ac::Graph g = load_graph(graph_path);
    std::size_t n = static_cast<std::size_t>(g.vertex_count());
    ac::VertexSet a = a_csv.empty() ? g.all_vertices() : csv_set(a_csv, n);
    ac::VertexSet x = csv_set(x_csv, n);
    ac::PartitionCheckMode mode;
    if (sampled > 0) {
        mode.exhaustive = false;
        mode.sample_count = sampled;
    }
    ac::PartitionVariant pv = variant == "chi" ? ac::PartitionVariant::Chi : ac::PartitionVariant::MinDeg;
    auto search = ac::find_good_partition(g, a, x, pv, p, threshold, seed, max_tries, mode, family_cap);
    emit(ac::partition_search_json(search));
    // a retry budget running out is not a sound not-found
    return search.status == ac::GoodPartitionSearch::Status::Found ? kExitFound : kExitError;
}

int cmd_find_pair(const std::string& graph_path, const std::string& mode, long long c, int p, int q, long long s,
    std::uint64_t seed, int max_tries, bool brute, int brute_cap)
{
    ac::Graph g = load_graph(graph_path);
    if (brute) {
        ac::BruteMode bm;
        if (mode == "chi")
            bm = ac::BruteMode::Chi;
        else if (mode == "mindeg")
            bm = ac::BruteMode::MinDeg;
        else if (mode == "chi-chi")
            bm = ac::BruteMode::ChiChi;
        else
            throw ac::GraphError("brute mode must be chi, mindeg or chi-chi");
        auto pair = ac::brute_force_pair(g, c, bm, brute_cap);
        ac::Json j;
        j["schema_version"] = ac::kSchemaVersion;
        j["kind"] = "brute-pair-search";
        j["mode"] = mode;
        j["c"] = c;
        j["outcome"] = pair ? "found" : "not-found";
        if (pair) {
            j["a"] = ac::set_json(pair->first);
            j["b"] = ac::set_json(pair->second);
        }
        emit(j);
        return pair ? kExitFound : kExitNotFound;
    }
    ac::PipelineCaps caps;
    caps.max_tries = max_tries;
    ac::PairSearchOutcome outcome;
    if (mode == "chi")
        outcome = ac::find_pair_chi(g, p, q, c, seed, caps);
    else if (mode == "mindeg")
        outcome = ac::find_pair_mindeg(g, p, q, s, c, seed, caps);
    else
        throw ac::GraphError("mode must be chi or mindeg (chi-chi needs --brute)");
    emit(ac::pair_outcome_json(outcome));
    switch (outcome.kind) {
    case ac::PairSearchOutcome::Kind::Found:
        return kExitFound;
    case ac::PairSearchOutcome::Kind::NotFound:
        return kExitNotFound;
    default:
        std::cerr << "error: " << outcome.error_code << ": " << outcome.error_detail << "\n";
        return kExitError;
    }
}

long long recount_index_set(const ac::Graph& g, const ac::Json& doc, const std::vector<int>& parts_idx)
{
    std::size_t n = static_cast<std::size_t>(g.vertex_count());
    ac::VertexSet a = ac::set_from_json(doc.at("set"), n);
    ac::VertexSet x = ac::set_from_json(doc.at("cover"), n);
    bool with_cover = doc.at("variant").get<std::string>() == "chi";
    const ac::Json& trial = doc.at("trial");
    std::vector<int> ground = trial.at("ground_vertices").get<std::vector<int>>();
    std::vector<int> assignment = trial.at("assignment").get<std::vector<int>>();
    ac::Bitset inside(n);
    if (with_cover)
        inside |= x;
    for (std::size_t i = 0; i < ground.size(); ++i)
        for (int part : parts_idx)
            if (assignment[i] == part)
                inside.set(static_cast<std::size_t>(ground[i]));
    return g.edges_within(inside);
}

int cmd_verify(const std::string& graph_path, const std::string& tournament_path, const std::string& cert_path,
    long long c_override)
{
    ac::Json doc = ac::Json::parse(read_input(cert_path));
    std::string kind = ac::document_kind(doc);
    if (kind == "pair-search") {
        if (doc.at("outcome") == "found") {
            doc = doc.at("certificate");
            kind = "pair-certificate";
        } else if (doc.at("outcome") == "not-found") {
            doc = doc.at("trace");
            kind = "bound-trace";
        } else {
            std::cerr << "error outcomes carry nothing to verify\n";
            return kExitError;
        }
    }

    if (kind == "rock-certificate") {
        ac::Graph g = load_graph(graph_path);
        ac::RockAudit audit = ac::verify_rock(g, ac::rock_certificate_from_json(doc));
        emit(ac::rock_audit_json(audit));
        return audit.pass ? kExitFound : kExitError;
    }
    if (kind == "matching-decomposition") {
        ac::Graph g = load_graph(graph_path);
        ac::DecompositionAudit audit = ac::verify_decomposition(g, ac::matching_decomposition_from_json(doc));
        emit(ac::decomposition_audit_json(audit));
        return audit.pass ? kExitFound : kExitError;
    }
    if (kind == "pair-certificate") {
        ac::Graph g = load_graph(graph_path);
        ac::PairCertificate cert = ac::pair_certificate_from_json(doc);
        long long c = c_override >= 0 ? c_override : cert.c;
        ac::PairAudit audit = ac::verify_pair(g, cert, c);
        emit(ac::pair_audit_json(audit));
        return audit.pass ? kExitFound : kExitError;
    }
    if (kind == "bound-trace") {
        ac::Graph g = load_graph(graph_path);
        ac::Json j;
        j["schema_version"] = ac::kSchemaVersion;
        j["kind"] = "audit-report";
        j["target"] = "bound-trace";
        if (doc.at("mode") == "chi") {
            std::vector<int> coloring = doc.at("coloring").get<std::vector<int>>();
            int count = doc.at("color_count").get<int>();
            bool valid = ac::valid_coloring(g, coloring);
            int used = 0;
            for (int col : coloring)
                used = std::max(used, col + 1);
            bool pass = valid && used <= count;
            j["pass"] = pass;
            if (!pass)
                j["failure"] = valid ? "coloring uses more colors than stated" : "coloring is not proper";
            j["colors_used"] = used;
            emit(j);
            return pass ? kExitFound : kExitError;
        }
        // mindeg: recompute the edge audit
        std::size_t n = static_cast<std::size_t>(g.vertex_count());
        ac::Bitset scope = g.all_vertices();
        for (const auto& r : doc.at("peeled_rocks"))
            scope -= ac::set_from_json(r.at("set"), n);
        bool pass = g.edges_within(scope) == doc.at("scope_edge_count").get<long long>()
            && static_cast<long long>(scope.count()) == doc.at("scope_vertex_count").get<long long>();
        ac::VertexSet rock = ac::set_from_json(doc.at("rock"), n);
        if (rock.any()) {
            pass = pass && g.edges_within(rock) == doc.at("edges_inside_rock").get<long long>()
                && g.edges_within(scope - rock) == doc.at("edges_outside_rock").get<long long>();
        }
        j["pass"] = pass;
        if (!pass)
            j["failure"] = "edge audit does not match the graph";
        emit(j);
        return pass ? kExitFound : kExitError;
    }
    if (kind == "partition-search") {
        ac::Graph g = load_graph(graph_path);
        ac::Json j;
        j["schema_version"] = ac::kSchemaVersion;
        j["kind"] = "audit-report";
        j["target"] = "partition-search";
        if (!doc.contains("trial")) {
            j["pass"] = true;
            j["note"] = "no trial recorded";
            emit(j);
            return kExitFound;
        }
        long long threshold = doc.at("threshold").get<long long>();
        bool pass = true;
        std::string failure;
        for (const auto& rec : doc.at("trial").at("checked")) {
            std::vector<int> parts_idx = rec.at("parts").get<std::vector<int>>();
            long long recorded = rec.at("edges").get<long long>();
            long long actual = recount_index_set(g, doc, parts_idx);
            if (actual != recorded) {
                pass = false;
                failure = "recorded count differs from recomputed";
                break;
            }
            if (rec.at("pass").get<bool>() != (actual >= threshold)) {
                pass = false;
                failure = "recorded verdict differs from recomputed";
                break;
            }
        }
        j["pass"] = pass;
        if (!pass)
            j["failure"] = failure;
        emit(j);
        return pass ? kExitFound : kExitError;
    }
    if (kind == "peel-sequence") {
        ac::Graph g = load_graph(graph_path);
        std::size_t n = static_cast<std::size_t>(g.vertex_count());
        ac::Json j;
        j["schema_version"] = ac::kSchemaVersion;
        j["kind"] = "audit-report";
        j["target"] = "peel-sequence";
        bool pass = true;
        std::string failure;
        ac::Bitset alive = g.all_vertices();
        int s = doc.at("size_cap").get<int>();
        for (const auto& rj : doc.at("rocks")) {
            ac::RockCertificate cert = ac::rock_certificate_from_json(rj);
            if (static_cast<int>(cert.set.count()) > s) {
                pass = false;
                failure = "a peeled rock exceeds the size cap";
                break;
            }
            ac::RockAudit audit = ac::verify_rock(g, cert, {}, &alive);
            if (!audit.pass) {
                pass = false;
                failure = audit.failure;
                break;
            }
            alive -= cert.set;
        }
        if (pass && alive != ac::set_from_json(doc.at("residual"), n)) {
            pass = false;
            failure = "stated residual differs from replayed peeling";
        }
        j["pass"] = pass;
        if (!pass)
            j["failure"] = failure;
        emit(j);
        return pass ? kExitFound : kExitError;
    }
    if (kind == "tournament-pair-certificate") {
        ac::Tournament t = load_tournament(tournament_path);
        auto cert = ac::tournament_pair_from_json(doc, static_cast<std::size_t>(t.vertex_count()));
        ac::Json j;
        j["schema_version"] = ac::kSchemaVersion;
        j["kind"] = "audit-report";
        j["target"] = "tournament-pair-certificate";
        bool pass = true;
        std::string failure;
        if (cert.a.none() || cert.b.none() || cert.a.intersects(cert.b)) {
            pass = false;
            failure = "sides must be nonempty and disjoint";
        } else if (!ac::is_complete_to(t, cert.a, cert.b)) {
            pass = false;
            failure = "a is not complete to b";
        } else {
            long long chi_a = ac::tournament_chromatic(t.induced(cert.a));
            long long chi_b = ac::tournament_chromatic(t.induced(cert.b));
            if (chi_a != cert.chi_a || chi_b != cert.chi_b) {
                pass = false;
                failure = "stated chromatic numbers differ from recomputed";
            }
        }
        j["pass"] = pass;
        if (!pass)
            j["failure"] = failure;
        emit(j);
        return pass ? kExitFound : kExitError;
    }
    std::cerr << "unrecognized certificate kind `" << kind << "`\n";
    return kExitError;
}

int cmd_params(const std::string& mode, long long t, long long c)
{
    if (mode == "chi")
        emit(ac::chi_parameters_json(ac::chi_parameters(t, c)));
    else if (mode == "mindeg")
        emit(ac::mindeg_parameters_json(ac::mindeg_parameters(t, c)));
    else
        throw ac::GraphError("params mode must be chi or mindeg");
    return kExitFound;
}

int cmd_tournament(const std::string& sub, const std::string& tournament_path, long long c)
{
    ac::Tournament t = load_tournament(tournament_path);
    ac::Json j;
    j["schema_version"] = ac::kSchemaVersion;
    if (sub == "chi") {
        j["kind"] = "tournament-chromatic";
        j["value"] = ac::tournament_chromatic(t);
        emit(j);
        return kExitFound;
    }
    if (sub == "dom") {
        j["kind"] = "tournament-domination";
        j["value"] = ac::domination_number(t);
        emit(j);
        return kExitFound;
    }
    auto cert = sub == "pair" ? ac::search_complete_pair(t, c) : ac::search_cyclic_triangle_pair(t, c);
    j["kind"] = sub == "pair" ? "tournament-pair-search" : "tournament-triangle-pair-search";
    j["c"] = c;
    j["outcome"] = cert ? "found" : "not-found";
    if (cert)
        j["certificate"] = ac::tournament_pair_json(*cert);
    emit(j);
    return cert ? kExitFound : kExitNotFound;
}

int cmd_generate(const std::string& family, std::uint64_t seed, const std::map<std::string, std::string>& params,
    const std::string& out_path)
{
    ac::GeneratorOutput gen = ac::generate(family, params, seed);
    std::string text;
    if (std::holds_alternative<ac::Graph>(gen.object))
        text = "c generator " + gen.description + "\n" + ac::serialize_graph(std::get<ac::Graph>(gen.object));
    else
        text = "c generator " + gen.description + "\n" + ac::serialize_tournament(std::get<ac::Tournament>(gen.object));
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw ac::GraphError("cannot open " + out_path);
        out << text;
    }
    return kExitFound;
}

int cmd_campaign(const std::string& file)
{
    ac::Campaign campaign = ac::parse_campaign(read_input(file));
    ac::CampaignResult result = ac::run_campaign(campaign);
    if (!campaign.output_path.empty()) {
        std::ofstream out(campaign.output_path, std::ios::binary);
        if (!out)
            throw ac::GraphError("campaign: cannot open output path " + campaign.output_path);
        out << result.document.dump(1) << "\n";
        emit(result.document.at("frontier"));
    } else {
        emit(result.document);
    }
    return kExitFound;
}

int cmd_bench(const std::string& kernel, int n, std::uint64_t seed, int reps)
{
    ac::Json times = ac::Json::array();
    for (int r = 0; r < reps; ++r) {
        ac::Graph g = ac::gen_gnp(n, 0.5, seed + static_cast<std::uint64_t>(r));
        auto start = std::chrono::steady_clock::now();
        if (kernel == "rock") {
            ac::RockCaps caps;
            caps.exact_max_n = std::max(caps.exact_max_n, n);
            (void)ac::find_rock_exact(g, 2, caps);
        } else if (kernel == "rock-heuristic") {
            (void)ac::find_rock_heuristic(g, 2);
        } else if (kernel == "chromatic") {
            ac::SolverCaps caps;
            caps.chromatic_max_n = std::max(caps.chromatic_max_n, n);
            caps.clique_max_n = caps.chromatic_max_n;
            (void)ac::chromatic_number(g, caps);
        } else if (kernel == "decompose") {
            (void)ac::decompose(g, 2);
        } else if (kernel == "partition") {
            (void)ac::find_good_partition(g, g.all_vertices(), ac::Bitset(static_cast<std::size_t>(n)),
                ac::PartitionVariant::Chi, 1, g.edge_count() / 32, seed, 8);
        } else {
            throw ac::GraphError("unknown bench kernel `" + kernel + "`");
        }
        auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    ac::Json j;
    j["schema_version"] = ac::kSchemaVersion;
    j["kind"] = "bench";
    j["kernel"] = kernel;
    j["n"] = n;
    j["reps"] = reps;
    j["ms"] = times;
    emit(j);
    return kExitFound;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"anticomplete-pair search toolkit"};
    app.require_subcommand(1);

    std::string graph_path = "-";
    std::string tournament_path = "-";
    int p = 1, q = 2, brute_cap = 14, max_tries = 64, cap = 0, sampled = 0, reps = 5, n = 16;
    long long c = 1, s = 8, threshold = 0, family_cap = 1000000, c_override = -1, t_target = 1;
    std::uint64_t seed = 0;
    bool heuristic = false, brute = false;
    std::string mode, variant = "chi", a_csv, x_csv, scope_csv, cert_path, family, out_path, campaign_file, kernel
        = "rock";
    std::map<std::string, std::string> gen_params;

    auto* rock = app.add_subcommand("rock", "find a p-rock and emit its certificate");
    rock->add_option("-g,--graph", graph_path, "edge-list file, - for stdin");
    rock->add_option("-p", p, "denseness target")->required();
    rock->add_flag("--heuristic", heuristic, "inclusion-minimal heuristic finder");
    rock->add_option("--cap", cap, "exact enumeration cap override");

    auto* peel = app.add_subcommand("peel", "extract disjoint size-capped rocks until none remains");
    peel->add_option("-g,--graph", graph_path, "edge-list file, - for stdin");
    peel->add_option("-p", p, "denseness target")->required();
    peel->add_option("-s", s, "rock size cap")->required();
    peel->add_option("--cap", cap, "exact enumeration cap override");

    auto* decomp = app.add_subcommand("decompose", "partition edges into q-matchings plus a covered residue");
    decomp->add_option("-g,--graph", graph_path, "edge-list file, - for stdin");
    decomp->add_option("-q", q, "matching cardinality")->required();
    decomp->add_option("--scope", scope_csv, "restrict to the induced subgraph on these vertices (csv)");

    auto* part = app.add_subcommand("partition", "randomized search for an edge-spreading partition");
    part->add_option("-g,--graph", graph_path, "edge-list file, - for stdin");
    part->add_option("--variant", variant, "chi | mindeg")->required();
    part->add_option("-p", p, "parts parameter (chi: 4p+2, mindeg: 8p+4)")->required();
    part->add_option("--threshold", threshold, "edge count every index set must reach")->required();
    part->add_option("--seed", seed, "base seed");
    part->add_option("--max-tries", max_tries, "trial budget");
    part->add_option("--sampled", sampled, "check this many random index sets instead of all");
    part->add_option("--a", a_csv, "the vertex set (csv, default all)");
    part->add_option("--x", x_csv, "the cover inside it (csv, default empty)");
    part->add_option("--family-cap", family_cap, "largest family enumerated exhaustively");

    auto* fp = app.add_subcommand("find-pair", "run an anticomplete-pair search pipeline");
    fp->add_option("-g,--graph", graph_path, "edge-list file, - for stdin");
    fp->add_option("--mode", mode, "chi | mindeg | chi-chi (chi-chi needs --brute)")->required();
    fp->add_option("-c", c, "target level for the pair")->required();
    fp->add_option("-p", p, "surrogate rock denseness");
    fp->add_option("-q", q, "surrogate matching cardinality");
    fp->add_option("-s", s, "surrogate peel size cap (mindeg)");
    fp->add_option("--seed", seed, "partition search seed");
    fp->add_option("--max-tries", max_tries, "partition trial budget");
    fp->add_flag("--brute", brute, "exhaustive oracle instead of the pipeline");
    fp->add_option("--brute-cap", brute_cap, "oracle vertex cap");

    auto* verify = app.add_subcommand("verify", "recompute a certificate's claims from the input");
    verify->add_option("-g,--graph", graph_path, "edge-list file, - for stdin");
    verify->add_option("--tournament", tournament_path, "tournament file (tournament certificates)");
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();
    verify->add_option("-c", c_override, "override the b-side target level");

    auto* params = app.add_subcommand("params", "exact parameter chains for the two main statements");
    params->add_option("--mode", mode, "chi | mindeg")->required();
    params->add_option("-t", t_target, "forbidden clique/biclique order")->required();
    params->add_option("-c", c, "target level")->required();

    auto* tour = app.add_subcommand("tournament", "tournament oracles and pair searches");
    tour->require_subcommand(1);
    auto* tchi = tour->add_subcommand("chi", "minimum acyclic cover size");
    auto* tdom = tour->add_subcommand("dom", "domination number");
    auto* tpair = tour->add_subcommand("pair", "disjoint A complete to B, both chromatic >= c");
    auto* ttri = tour->add_subcommand("triangle-pair", "cyclic triangle complete to a chromatic >= c set");
    for (auto* sub : {tchi, tdom, tpair, ttri})
        sub->add_option("--tournament,-g", tournament_path, "tournament file, - for stdin");
    tpair->add_option("-c", c, "chromatic target")->required();
    ttri->add_option("-c", c, "chromatic target")->required();

    auto* gen = app.add_subcommand("generate", "produce a graph or tournament with embedded metadata");
    gen->add_option("--family", family,
           "complete | complete-bipartite | gnp | mycielski | kneser | shift | random-tournament")
        ->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "output file (default stdout)");
    std::string gp_n, gp_k, gp_a, gp_b, gp_prob, gp_iter;
    gen->add_option("-n", gp_n, "vertex-count parameter");
    gen->add_option("-k", gp_k, "subset size (kneser)");
    gen->add_option("-a", gp_a, "left side (complete-bipartite)");
    gen->add_option("-b", gp_b, "right side (complete-bipartite)");
    gen->add_option("--edge-prob", gp_prob, "edge probability (gnp)");
    gen->add_option("--iterations", gp_iter, "construction iterations (mycielski)");

    auto* camp = app.add_subcommand("campaign", "run a campaign file");
    camp->add_option("--file", campaign_file, "campaign description file")->required();

    auto* bench = app.add_subcommand("bench", "time a search kernel");
    bench->add_option("--kernel", kernel, "rock | rock-heuristic | chromatic | decompose | partition");
    bench->add_option("-n", n, "instance size");
    bench->add_option("--seed", seed, "instance seed");
    bench->add_option("--reps", reps, "repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream devnull;
        int code = app.exit(e, devnull, devnull);
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" || e.get_name() == "CallForVersion") {
            std::cout << (devnull.str().empty() ? app.help() : devnull.str());
            return 0;
        }
        std::cerr << "usage error: " << e.what() << "\n";
        (void)code;
        return kExitError;
    }

    try {
        if (rock->parsed())
            return cmd_rock(graph_path, p, heuristic, cap);
        if (peel->parsed())
            return cmd_peel(graph_path, p, static_cast<int>(s), cap);
        if (decomp->parsed())
            return cmd_decompose(graph_path, q, scope_csv);
        if (part->parsed())
            return cmd_partition(graph_path, variant, p, threshold, seed, max_tries, sampled, a_csv, x_csv,
                family_cap);
        if (fp->parsed())
            return cmd_find_pair(graph_path, mode, c, p, q, s, seed, max_tries, brute, brute_cap);
        if (verify->parsed())
            return cmd_verify(graph_path, tournament_path, cert_path, c_override);
        if (params->parsed())
            return cmd_params(mode, t_target, c);
        if (tour->parsed()) {
            if (tchi->parsed())
                return cmd_tournament("chi", tournament_path, c);
            if (tdom->parsed())
                return cmd_tournament("dom", tournament_path, c);
            if (tpair->parsed())
                return cmd_tournament("pair", tournament_path, c);
            return cmd_tournament("triangle-pair", tournament_path, c);
        }
        if (gen->parsed()) {
            if (!gp_n.empty())
                gen_params["n"] = gp_n;
            if (!gp_k.empty())
                gen_params["k"] = gp_k;
            if (!gp_a.empty())
                gen_params["a"] = gp_a;
            if (!gp_b.empty())
                gen_params["b"] = gp_b;
            if (!gp_prob.empty())
                gen_params["edge-prob"] = gp_prob;
            if (!gp_iter.empty())
                gen_params["iterations"] = gp_iter;
            return cmd_generate(family, seed, gen_params, out_path);
        }
        if (camp->parsed())
            return cmd_campaign(campaign_file);
        if (bench->parsed())
            return cmd_bench(kernel, n, seed, reps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
