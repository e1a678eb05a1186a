#include "ac/campaign.hpp"

#include "ac/enumerate.hpp"
#include "ac/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

namespace ac {

namespace {

    std::string trim(const std::string& s)
    {
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return "";
        std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

} // namespace

Campaign parse_campaign(const std::string& text)
{
    Campaign c;
    c.c_values = {1};
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[' && t.back() == ']') {
            section = t.substr(1, t.size() - 2);
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "expected `key = value`");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (section == "campaign") {
            if (key == "mode")
                c.mode = value;
            else if (key == "t")
                c.t = std::stoll(value);
            else if (key == "c") {
                c.c_values.clear();
                std::istringstream cs(value);
                std::string tok;
                while (std::getline(cs, tok, ','))
                    c.c_values.push_back(std::stoll(trim(tok)));
            } else if (key == "seed_base")
                c.seed_base = std::stoull(value);
            else if (key == "output")
                c.output_path = value;
            else
                throw ParseError(lineno, "unknown campaign key `" + key + "`");
        } else if (section == "generator") {
            if (key == "family")
                c.family = value;
            else if (key == "n_min")
                c.n_min = std::stoi(value);
            else if (key == "n_max")
                c.n_max = std::stoi(value);
            else if (key == "count")
                c.count = std::stoi(value);
            else
                c.family_params[key] = value;
        } else if (section == "search") {
            if (key == "p")
                c.p = std::stoi(value);
            else if (key == "q")
                c.q = std::stoi(value);
            else if (key == "s")
                c.s = std::stoll(value);
            else if (key == "max_tries")
                c.max_tries = std::stoi(value);
            else
                throw ParseError(lineno, "unknown search key `" + key + "`");
        } else if (section == "caps") {
            if (key == "oracle_max_n")
                c.oracle_max_n = std::stoi(value);
            else if (key == "solver_max_n") {
                c.solver.chromatic_max_n = std::stoi(value);
                c.solver.clique_max_n = std::stoi(value);
            } else
                throw ParseError(lineno, "unknown caps key `" + key + "`");
        } else {
            throw ParseError(lineno, "key outside any known section");
        }
    }
    if (c.mode.empty())
        throw GraphError("campaign: mode is required");
    if (c.family.empty())
        throw GraphError("campaign: generator family is required");
    if (c.mode != "chi" && c.mode != "mindeg" && c.mode != "chi-chi" && c.mode != "tournament")
        throw GraphError("campaign: unknown mode `" + c.mode + "`");
    return c;
}

std::string campaign_to_text(const Campaign& c)
{
    std::ostringstream out;
    out << "[campaign]\n";
    out << "mode = " << c.mode << "\n";
    out << "t = " << c.t << "\n";
    out << "c = ";
    for (std::size_t i = 0; i < c.c_values.size(); ++i)
        out << (i ? "," : "") << c.c_values[i];
    out << "\n";
    out << "seed_base = " << c.seed_base << "\n";
    if (!c.output_path.empty())
        out << "output = " << c.output_path << "\n";
    out << "\n[generator]\n";
    out << "family = " << c.family << "\n";
    out << "n_min = " << c.n_min << "\n";
    out << "n_max = " << c.n_max << "\n";
    out << "count = " << c.count << "\n";
    for (const auto& [k, v] : c.family_params)
        out << k << " = " << v << "\n";
    out << "\n[search]\n";
    out << "p = " << c.p << "\n";
    out << "q = " << c.q << "\n";
    out << "s = " << c.s << "\n";
    out << "max_tries = " << c.max_tries << "\n";
    out << "\n[caps]\n";
    out << "oracle_max_n = " << c.oracle_max_n << "\n";
    return out.str();
}

bool frontier_monotone(const std::vector<FrontierRow>& rows)
{
    std::map<long long, std::vector<const FrontierRow*>> by_t;
    for (const auto& r : rows)
        by_t[r.t].push_back(&r);
    for (auto& [t, group] : by_t) {
        std::vector<const FrontierRow*> sorted = group;
        std::sort(sorted.begin(), sorted.end(),
            [](const FrontierRow* a, const FrontierRow* b) { return a->c < b->c; });
        long long prev = LLONG_MIN;
        for (const FrontierRow* r : sorted) {
            if (!r->has_value)
                continue;
            if (r->threshold < prev)
                return false;
            prev = r->threshold;
        }
    }
    return true;
}

namespace {

    struct Instance {
        std::string id;
        std::uint64_t seed = 0;
        bool is_tournament = false;
        Graph graph;
        Tournament tournament;
        std::string description;
        std::string generation_error;
    };

    std::vector<Instance> build_instances(const Campaign& c)
    {
        std::vector<Instance> out;
        if (c.family == "exhaustive") {
            for (int n = c.n_min; n <= c.n_max; ++n) {
                if (c.mode == "tournament") {
                    auto all = enumerate_tournaments(n);
                    for (std::size_t i = 0; i < all.size(); ++i) {
                        Instance inst;
                        inst.id = "exhaustive-n" + std::to_string(n) + "-i" + std::to_string(i);
                        inst.is_tournament = true;
                        inst.tournament = unpack_tournament(all[i]);
                        inst.description = "exhaustive tournament n=" + std::to_string(n);
                        out.push_back(std::move(inst));
                    }
                } else {
                    auto all = enumerate_graphs(n);
                    for (std::size_t i = 0; i < all.size(); ++i) {
                        Instance inst;
                        inst.id = "exhaustive-n" + std::to_string(n) + "-i" + std::to_string(i);
                        inst.graph = unpack_graph(all[i]);
                        inst.description = "exhaustive graph n=" + std::to_string(n);
                        out.push_back(std::move(inst));
                    }
                }
            }
            return out;
        }
        std::uint64_t index = 0;
        for (int n = c.n_min; n <= c.n_max; ++n) {
            for (int i = 0; i < c.count; ++i, ++index) {
                Instance inst;
                inst.seed = c.seed_base + index;
                inst.id = c.family + "-n" + std::to_string(n) + "-i" + std::to_string(i);
                auto params = c.family_params;
                params["n"] = std::to_string(n);
                try {
                    GeneratorOutput gen = generate(c.family, params, inst.seed);
                    inst.description = gen.description;
                    if (std::holds_alternative<Tournament>(gen.object)) {
                        inst.is_tournament = true;
                        inst.tournament = std::get<Tournament>(gen.object);
                    } else {
                        inst.graph = std::get<Graph>(gen.object);
                    }
                } catch (const std::exception& e) {
                    inst.generation_error = e.what();
                }
                out.push_back(std::move(inst));
            }
        }
        return out;
    }

    int min_degree_of(const Graph& g)
    {
        if (g.vertex_count() == 0)
            return 0;
        int d = g.vertex_count();
        for (int v = 0; v < g.vertex_count(); ++v)
            d = std::min(d, g.degree(v));
        return d;
    }

    Json evaluate_instance(const Campaign& c, const Instance& inst, long long cv)
    {
        Json rec;
        rec["id"] = inst.id;
        rec["generator"] = inst.description;
        rec["seed"] = inst.seed;
        rec["c"] = cv;
        if (!inst.generation_error.empty()) {
            rec["error"] = inst.generation_error;
            return rec;
        }
        try {
            if (c.mode == "tournament") {
                const Tournament& t = inst.tournament;
                rec["n"] = t.vertex_count();
                long long value = tournament_chromatic(t, c.tournament_caps);
                rec["value"] = value;
                rec["filter_pass"] = true;
                bool sound = t.vertex_count() <= c.tournament_caps.pair_search_max_n;
                rec["oracle_available"] = sound;
                if (sound) {
                    auto cert = search_complete_pair(t, cv, c.tournament_caps);
                    rec["pair_found"] = cert.has_value();
                    if (cert)
                        rec["certificate"] = tournament_pair_json(*cert);
                    rec["no_pair"] = !cert.has_value();
                } else {
                    rec["pair_found"] = nullptr;
                    rec["no_pair"] = nullptr;
                }
                return rec;
            }

            const Graph& g = inst.graph;
            rec["n"] = g.vertex_count();
            rec["m"] = g.edge_count();
            bool filter_pass = true;
            if (c.mode == "chi" || c.mode == "chi-chi") {
                int omega = clique_number(g, c.solver);
                rec["omega"] = omega;
                filter_pass = omega < c.t;
                rec["value"] = chromatic_number(g, c.solver);
            } else {
                int tau = biclique_number(g, c.solver);
                rec["tau"] = tau;
                filter_pass = tau < c.t;
                rec["value"] = min_degree_of(g);
            }
            rec["filter_pass"] = filter_pass;

            if (c.mode == "chi" || c.mode == "mindeg") {
                PipelineCaps caps;
                caps.solver = c.solver;
                caps.max_tries = c.max_tries;
                PairSearchOutcome outcome = c.mode == "chi"
                    ? find_pair_chi(g, c.p, c.q, cv, inst.seed, caps)
                    : find_pair_mindeg(g, c.p, c.q, c.s, cv, inst.seed, caps);
                rec["finder"] = pair_outcome_json(outcome);
            }

            bool oracle_ok = g.vertex_count() <= c.oracle_max_n;
            rec["oracle_available"] = oracle_ok;
            if (oracle_ok) {
                BruteMode bm = c.mode == "mindeg" ? BruteMode::MinDeg
                                                  : (c.mode == "chi" ? BruteMode::Chi : BruteMode::ChiChi);
                auto pair = brute_force_pair(g, cv, bm, c.oracle_max_n);
                rec["pair_found"] = pair.has_value();
                rec["no_pair"] = !pair.has_value();
            } else {
                rec["pair_found"] = nullptr;
                rec["no_pair"] = nullptr;
            }
        } catch (const std::exception& e) {
            rec["error"] = e.what();
        }
        return rec;
    }

    int worker_count()
    {
        const char* env = std::getenv("ACPAIR_WORKERS");
        if (!env)
            return 1;
        int w = std::atoi(env);
        return w < 1 ? 1 : w;
    }

} // namespace

CampaignResult run_campaign(const Campaign& c)
{
    std::vector<Instance> instances = build_instances(c);
    struct Job {
        std::size_t instance;
        long long cv;
    };
    std::vector<Job> jobs;
    for (long long cv : c.c_values)
        for (std::size_t i = 0; i < instances.size(); ++i)
            jobs.push_back({i, cv});

    std::vector<Json> records(jobs.size());
    int workers = worker_count();
    if (workers <= 1) {
        for (std::size_t j = 0; j < jobs.size(); ++j)
            records[j] = evaluate_instance(c, instances[jobs[j].instance], jobs[j].cv);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> cursor{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                while (true) {
                    std::size_t j = cursor.fetch_add(1);
                    if (j >= jobs.size())
                        return;
                    records[j] = evaluate_instance(c, instances[jobs[j].instance], jobs[j].cv);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    // frontier: per c value, the largest mode value among sound no-pair
    // instances that pass the t filter
    CampaignResult result;
    for (long long cv : c.c_values) {
        FrontierRow row;
        row.t = c.t;
        row.c = cv;
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            if (jobs[j].cv != cv)
                continue;
            const Json& rec = records[j];
            if (rec.contains("error") || !rec.contains("no_pair") || rec["no_pair"].is_null())
                continue;
            if (!rec["no_pair"].get<bool>() || !rec["filter_pass"].get<bool>())
                continue;
            long long value = rec["value"].get<long long>();
            if (!row.has_value || value > row.threshold) {
                row.has_value = true;
                row.threshold = value;
                row.witness = rec["id"].get<std::string>();
            }
        }
        result.frontier.push_back(row);
    }
    if (!frontier_monotone(result.frontier))
        throw GraphError("campaign: frontier monotonicity audit failed");

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "campaign-result";
    doc["campaign"] = Json{{"mode", c.mode}, {"t", c.t}, {"c", c.c_values}, {"seed_base", c.seed_base},
        {"family", c.family}, {"n_min", c.n_min}, {"n_max", c.n_max}, {"count", c.count},
        {"search", Json{{"p", c.p}, {"q", c.q}, {"s", c.s}, {"max_tries", c.max_tries}}},
        {"oracle_max_n", c.oracle_max_n}};
    doc["records"] = records;
    Json frontier = Json::array();
    for (const auto& row : result.frontier) {
        Json r;
        r["t"] = row.t;
        r["c"] = row.c;
        if (row.has_value) {
            r["threshold"] = row.threshold;
            r["witness"] = row.witness;
        } else {
            r["threshold"] = nullptr;
            r["witness"] = nullptr;
        }
        frontier.push_back(std::move(r));
    }
    doc["frontier"] = frontier;
    result.document = std::move(doc);
    return result;
}

std::string run_campaign_to_file(const Campaign& c)
{
    CampaignResult result = run_campaign(c);
    std::string bytes = result.document.dump(1) + "\n";
    if (!c.output_path.empty()) {
        std::ofstream out(c.output_path, std::ios::binary);
        if (!out)
            throw GraphError("campaign: cannot open output path " + c.output_path);
        out << bytes;
    }
    return bytes;
}

} // namespace ac
