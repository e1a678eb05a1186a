#include "ac/json_io.hpp"

namespace ac {

Json set_json(const VertexSet& s)
{
    return Json(s.to_vector());
}

VertexSet set_from_json(const Json& j, std::size_t capacity)
{
    Bitset b(capacity);
    for (const auto& v : j) {
        long long x = v.get<long long>();
        if (x < 0 || static_cast<std::size_t>(x) >= capacity)
            throw GraphError("vertex index " + std::to_string(x) + " outside the host graph");
        b.set(static_cast<std::size_t>(x));
    }
    return b;
}

Json rational_json(const Rational& r)
{
    return Json{{"num", r.num}, {"den", r.den}};
}

Rational rational_from_json(const Json& j)
{
    return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

namespace {

    Json edge_list_json(const EdgeList& edges)
    {
        Json out = Json::array();
        for (auto [u, v] : edges)
            out.push_back(Json::array({u, v}));
        return out;
    }

    EdgeList edge_list_from_json(const Json& j)
    {
        EdgeList out;
        for (const auto& e : j)
            out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return out;
    }

} // namespace

Json rock_certificate_json(const RockCertificate& cert)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "rock-certificate";
    j["graph_order"] = cert.set.capacity();
    j["p"] = cert.p;
    j["mode"] = cert.mode == RockMode::Exact ? "exact" : "heuristic-minimal";
    j["set"] = set_json(cert.set);
    j["internal_edges"] = cert.internal_edges;
    j["max_external_degree"] = cert.max_external_degree;
    return j;
}

RockCertificate rock_certificate_from_json(const Json& j)
{
    RockCertificate cert;
    std::size_t n = j.at("graph_order").get<std::size_t>();
    cert.p = j.at("p").get<int>();
    cert.mode = j.at("mode").get<std::string>() == "exact" ? RockMode::Exact : RockMode::HeuristicMinimal;
    cert.set = set_from_json(j.at("set"), n);
    cert.internal_edges = j.at("internal_edges").get<long long>();
    cert.max_external_degree = j.at("max_external_degree").get<int>();
    return cert;
}

Json rock_audit_json(const RockAudit& audit)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "audit-report";
    j["target"] = "rock-certificate";
    j["pass"] = audit.pass;
    if (!audit.pass) {
        j["failure"] = audit.failure;
        if (audit.witness_vertex >= 0)
            j["witness_vertex"] = audit.witness_vertex;
        if (!audit.witness_subset.empty())
            j["witness_subset"] = audit.witness_subset;
    }
    j["recomputed_edges"] = audit.recomputed_edges;
    j["recomputed_external"] = audit.recomputed_external;
    return j;
}

Json peel_result_json(const PeelResult& peel)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "peel-sequence";
    j["size_cap"] = peel.sequence.size_cap;
    j["count"] = peel.sequence.rocks.size();
    Json rocks = Json::array();
    for (const auto& r : peel.sequence.rocks)
        rocks.push_back(rock_certificate_json(r));
    j["rocks"] = rocks;
    if (peel.sequence.residual_rock_size)
        j["residual_rock_size"] = *peel.sequence.residual_rock_size;
    else
        j["residual_rock_size"] = nullptr;
    j["residual"] = set_json(peel.residual);
    return j;
}

Json matching_decomposition_json(const MatchingDecomposition& d)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "matching-decomposition";
    j["graph_order"] = d.scope.capacity();
    j["q"] = d.q;
    j["scope"] = set_json(d.scope);
    j["cover"] = set_json(d.cover);
    j["residue"] = edge_list_json(d.residue);
    Json ms = Json::array();
    for (const auto& m : d.matchings)
        ms.push_back(edge_list_json(m));
    j["matchings"] = ms;
    return j;
}

MatchingDecomposition matching_decomposition_from_json(const Json& j)
{
    MatchingDecomposition d;
    std::size_t n = j.at("graph_order").get<std::size_t>();
    d.q = j.at("q").get<int>();
    d.scope = set_from_json(j.at("scope"), n);
    d.cover = set_from_json(j.at("cover"), n);
    d.residue = edge_list_from_json(j.at("residue"));
    for (const auto& m : j.at("matchings"))
        d.matchings.push_back(edge_list_from_json(m));
    return d;
}

Json decomposition_audit_json(const DecompositionAudit& audit)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "audit-report";
    j["target"] = "matching-decomposition";
    j["pass"] = audit.pass;
    if (!audit.pass) {
        j["failure"] = audit.failure;
        if (audit.witness_edge)
            j["witness_edge"] = Json::array({audit.witness_edge->first, audit.witness_edge->second});
        if (audit.witness_matching >= 0)
            j["witness_matching"] = audit.witness_matching;
    }
    return j;
}

Json partition_family_json(const PartitionFamily& fam)
{
    Json j;
    j["k"] = fam.k;
    j["half_size"] = fam.half_size;
    j["ground"] = set_json(fam.ground);
    Json parts = Json::array();
    for (const auto& p : fam.parts)
        parts.push_back(set_json(p));
    j["parts"] = parts;
    return j;
}

Json partition_trial_json(const PartitionTrial& trial)
{
    Json j;
    j["seed"] = trial.seed;
    j["ground_vertices"] = trial.ground_vertices;
    j["assignment"] = trial.assignment;
    j["checked_count"] = trial.checked_count;
    j["min_edges"] = trial.min_edges;
    j["success"] = trial.success;
    j["statistical"] = trial.statistical;
    Json checked = Json::array();
    for (const auto& rec : trial.checked)
        checked.push_back(Json{{"parts", rec.parts}, {"edges", rec.edges}, {"pass", rec.pass}});
    j["checked"] = checked;
    if (trial.witness)
        j["witness"] = *trial.witness;
    else
        j["witness"] = nullptr;
    return j;
}

Json partition_search_json(const GoodPartitionSearch& search)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "partition-search";
    j["variant"] = search.variant == PartitionVariant::Chi ? "chi" : "mindeg";
    j["p"] = search.p;
    j["threshold"] = search.threshold;
    j["graph_order"] = search.set.capacity();
    j["set"] = set_json(search.set);
    j["cover"] = set_json(search.cover);
    switch (search.status) {
    case GoodPartitionSearch::Status::Found:
        j["status"] = "found";
        break;
    case GoodPartitionSearch::Status::Exhausted:
        j["status"] = "exhausted-tries";
        break;
    case GoodPartitionSearch::Status::FamilyTooLarge:
        j["status"] = "family-too-large";
        break;
    }
    j["family_size"] = search.family_size;
    j["tries_used"] = search.tries_used;
    if (search.family)
        j["family"] = partition_family_json(*search.family);
    if (search.trial)
        j["trial"] = partition_trial_json(*search.trial);
    return j;
}

Json pair_certificate_json(const PairCertificate& cert)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "pair-certificate";
    j["graph_order"] = cert.a.capacity();
    j["mode"] = cert.mode == PairMode::Chi ? "chi" : "mindeg";
    j["route"] = cert.route;
    j["c"] = cert.c;
    j["p"] = cert.p;
    j["q"] = cert.q;
    if (cert.mode == PairMode::MinDeg)
        j["s"] = cert.s;
    j["seed"] = cert.seed;
    j["a"] = set_json(cert.a);
    j["b"] = set_json(cert.b);
    j["a_denseness"] = rational_json(cert.a_denseness);
    j["a_required"] = rational_json(cert.a_required);
    if (cert.mode == PairMode::Chi)
        j["b_chromatic"] = cert.b_chromatic;
    else
        j["b_denseness"] = rational_json(cert.b_denseness);
    if (!cert.index_set.empty())
        j["index_set"] = cert.index_set;
    return j;
}

PairCertificate pair_certificate_from_json(const Json& j)
{
    PairCertificate cert;
    std::size_t n = j.at("graph_order").get<std::size_t>();
    cert.mode = j.at("mode").get<std::string>() == "chi" ? PairMode::Chi : PairMode::MinDeg;
    cert.route = j.at("route").get<std::string>();
    cert.c = j.at("c").get<long long>();
    cert.p = j.at("p").get<int>();
    cert.q = j.at("q").get<int>();
    if (j.contains("s"))
        cert.s = j.at("s").get<long long>();
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.a = set_from_json(j.at("a"), n);
    cert.b = set_from_json(j.at("b"), n);
    cert.a_denseness = rational_from_json(j.at("a_denseness"));
    cert.a_required = rational_from_json(j.at("a_required"));
    if (cert.mode == PairMode::Chi)
        cert.b_chromatic = j.at("b_chromatic").get<long long>();
    else
        cert.b_denseness = rational_from_json(j.at("b_denseness"));
    if (j.contains("index_set"))
        cert.index_set = j.at("index_set").get<std::vector<int>>();
    return cert;
}

Json bound_trace_json(const BoundTrace& trace)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bound-trace";
    j["mode"] = trace.mode == PairMode::Chi ? "chi" : "mindeg";
    j["failed_step"] = trace.failed_step;
    j["p"] = trace.p;
    j["q"] = trace.q;
    if (trace.mode == PairMode::MinDeg)
        j["s"] = trace.s;
    j["c"] = trace.c;
    j["seed"] = trace.seed;
    if (trace.mode == PairMode::MinDeg) {
        Json rocks = Json::array();
        for (std::size_t i = 0; i < trace.peeled_rocks.size(); ++i)
            rocks.push_back(Json{{"set", trace.peeled_rocks[i]},
                {"denseness", rational_json(trace.peeled_rock_denseness[i])},
                {"complement_denseness", rational_json(trace.peeled_complement_denseness[i])}});
        j["peeled_rocks"] = rocks;
    }
    j["rock"] = trace.rock.capacity() ? set_json(trace.rock) : Json::array();
    j["cover"] = trace.cover.capacity() ? set_json(trace.cover) : Json::array();
    if (trace.decomposition)
        j["decomposition"] = matching_decomposition_json(*trace.decomposition);
    j["ground_vertices"] = trace.ground_vertices;
    j["partition_assignment"] = trace.partition_assignment;
    Json scan = Json::array();
    for (const auto& rec : trace.scan) {
        Json r;
        r["index_set"] = rec.index_set;
        r["a_side_size"] = rec.a_side_size;
        r["a_side_edges"] = rec.a_side_edges;
        r["a_side_passed"] = rec.a_side_passed;
        r["b_size"] = rec.b_size;
        if (rec.b_chromatic)
            r["b_chromatic"] = *rec.b_chromatic;
        if (rec.b_denseness)
            r["b_denseness"] = rational_json(*rec.b_denseness);
        scan.push_back(std::move(r));
    }
    j["scan"] = scan;
    if (trace.mode == PairMode::Chi) {
        Json pieces = Json::array();
        for (const auto& piece : trace.pieces) {
            Json p;
            p["piece"] = piece.kind;
            if (!piece.index_set.empty())
                p["index_set"] = piece.index_set;
            p["vertices"] = piece.vertices;
            p["palette_base"] = piece.palette_base;
            p["palette_size"] = piece.palette_size;
            pieces.push_back(std::move(p));
        }
        j["pieces"] = pieces;
        j["coloring"] = trace.coloring;
        j["color_count"] = trace.color_count;
    } else {
        j["scope_vertex_count"] = trace.scope_vertex_count;
        j["scope_edge_count"] = trace.scope_edge_count;
        j["edges_inside_rock"] = trace.edges_inside_rock;
        j["edges_one_end_in_rock"] = trace.edges_one_end_in_rock;
        j["edges_outside_rock"] = trace.edges_outside_rock;
    }
    j["notes"] = trace.notes;
    return j;
}

Json pair_outcome_json(const PairSearchOutcome& outcome)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "pair-search";
    switch (outcome.kind) {
    case PairSearchOutcome::Kind::Found:
        j["outcome"] = "found";
        j["certificate"] = pair_certificate_json(*outcome.certificate);
        break;
    case PairSearchOutcome::Kind::NotFound:
        j["outcome"] = "not-found";
        j["trace"] = bound_trace_json(*outcome.trace);
        break;
    case PairSearchOutcome::Kind::Error:
        j["outcome"] = "error";
        j["error_code"] = outcome.error_code;
        j["error_detail"] = outcome.error_detail;
        if (outcome.partition_diagnostics)
            j["partition_diagnostics"] = partition_trial_json(*outcome.partition_diagnostics);
        break;
    }
    return j;
}

Json pair_audit_json(const PairAudit& audit)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "audit-report";
    j["target"] = "pair-certificate";
    j["pass"] = audit.pass;
    if (!audit.pass) {
        j["failure"] = audit.failure;
        if (audit.witness_edge)
            j["witness_edge"] = Json::array({audit.witness_edge->first, audit.witness_edge->second});
    }
    return j;
}

Json chi_parameters_json(const ChiParameters& par)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "parameters-chi";
    j["t"] = par.t;
    j["c"] = par.c;
    j["p"] = par.p;
    j["q"] = par.q;
    Json chain = Json::array();
    for (const auto& [level, value] : par.d_chain)
        chain.push_back(Json{{"clique_bound", level}, {"d", value.get_str()}, {"d_bits", mpz_sizeinbase(value.get_mpz_t(), 2)}});
    j["d_chain"] = chain;
    j["d_prime"] = par.d_prime.get_str();
    j["d"] = par.d.get_str();
    j["d_bits"] = mpz_sizeinbase(par.d.get_mpz_t(), 2);
    j["notes"] = par.notes;
    return j;
}

Json mindeg_parameters_json(const MindegParameters& par)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "parameters-mindeg";
    j["t"] = par.t;
    j["c"] = par.c;
    j["p"] = par.p;
    j["q"] = par.q;
    j["s"] = par.s.get_str();
    j["s_bits"] = mpz_sizeinbase(par.s.get_mpz_t(), 2);
    j["d"] = par.d.get_str();
    j["d_bits"] = mpz_sizeinbase(par.d.get_mpz_t(), 2);
    j["notes"] = par.notes;
    return j;
}

Json tournament_pair_json(const TournamentPairCertificate& cert)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "tournament-pair-certificate";
    j["graph_order"] = cert.a.capacity();
    j["a"] = set_json(cert.a);
    j["b"] = set_json(cert.b);
    j["chi_a"] = cert.chi_a;
    j["chi_b"] = cert.chi_b;
    return j;
}

TournamentPairCertificate tournament_pair_from_json(const Json& j, std::size_t capacity)
{
    TournamentPairCertificate cert;
    cert.a = set_from_json(j.at("a"), capacity);
    cert.b = set_from_json(j.at("b"), capacity);
    cert.chi_a = j.at("chi_a").get<long long>();
    cert.chi_b = j.at("chi_b").get<long long>();
    return cert;
}

std::string document_kind(const Json& j)
{
    if (!j.is_object() || !j.contains("kind"))
        return "";
    return j.at("kind").get<std::string>();
}

} // namespace ac
