// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criteria 7, 11 and 12 drive the CLI as a separate process.

#include "ac/campaign.hpp"
#include "ac/enumerate.hpp"
#include "ac/generators.hpp"
#include "ac/json_io.hpp"
#include "ac/params.hpp"
#include "ac/rng.hpp"

#include "naive.hpp"

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace ac;
using Clock = std::chrono::steady_clock;

namespace {

#ifndef ACPAIR_CLI_PATH
#define ACPAIR_CLI_PATH "acpair"
#endif

fs::path g_tmpdir;
int g_failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail, double seconds)
{
    std::printf("[%2d] %s  %s (%s; %.1f s)\n", id, pass ? "PASS" : "FAIL", label.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

template <typename F> void criterion(int id, const std::string& label, F body)
{
    auto start = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report(id, label, pass, detail, seconds);
}

int run_cli(const std::vector<std::string>& args, std::string* output = nullptr)
{
    static int counter = 0;
    fs::path out = g_tmpdir / ("cli-out-" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string("'") + ACPAIR_CLI_PATH + "'";
    for (const std::string& a : args)
        cmd += " '" + a + "'";
    cmd += " > '" + out.string() + "' 2>&1";
    int rc = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out);
        std::ostringstream buf;
        buf << in.rdbuf();
        *output = buf.str();
    }
    if (rc < 0)
        return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path write_file(const std::string& name, const std::string& content)
{
    fs::path p = g_tmpdir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph disjoint_cliques(int size, int count)
{
    std::vector<std::pair<int, int>> edges;
    for (int comp = 0; comp < count; ++comp) {
        int base = comp * size;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                edges.emplace_back(base + i, base + j);
    }
    return Graph::from_edges(size * count, edges);
}

// the shared random corpus for the rock-bound criteria
std::vector<Graph> rock_corpus()
{
    std::vector<Graph> corpus;
    Rng rng(20240801);
    const double probs[] = {0.35, 0.5, 0.65, 0.8};
    for (int i = 0; i < 500; ++i) {
        int n = 8 + static_cast<int>(rng.below(13)); // 8..20
        double prob = probs[i % 4];
        corpus.push_back(gen_gnp(n, prob, rng.next()));
    }
    return corpus;
}

struct PipelineRun {
    Graph graph;
    std::string graph_text;
    PairSearchOutcome outcome;
    long long c;
};

// pipeline regression corpus shared by criteria 7 and 8
std::vector<PipelineRun> pipeline_runs()
{
    std::vector<PipelineRun> runs;
    std::vector<Graph> corpus;
    corpus.push_back(disjoint_cliques(6, 2));
    corpus.push_back(disjoint_cliques(5, 2));
    corpus.push_back(disjoint_cliques(4, 3));
    corpus.push_back(gen_complete(10));
    corpus.push_back(gen_complete_bipartite(4, 4));
    corpus.push_back(gen_mycielski(1));
    Rng rng(424242);
    for (int i = 0; i < 14; ++i)
        corpus.push_back(gen_gnp(9 + static_cast<int>(rng.below(4)), 0.35 + 0.15 * (i % 3), rng.next()));

    for (const Graph& g : corpus) {
        for (long long c : {1LL, 2LL}) {
            for (int p : {1, 2}) {
                PipelineRun chi{g, serialize_graph(g), find_pair_chi(g, p, 2, c, 11 + c), c};
                runs.push_back(std::move(chi));
                PipelineRun md{g, serialize_graph(g), find_pair_mindeg(g, p, 2, 2 * p + 3, c, 13 + c), c};
                runs.push_back(std::move(md));
            }
        }
    }
    return runs;
}

} // namespace

int main()
{
    g_tmpdir = fs::temp_directory_path() / ("acpair-accept-" + std::to_string(::getpid()));
    fs::create_directories(g_tmpdir);

    std::printf("acceptance suite (cli: %s)\n", ACPAIR_CLI_PATH);

    std::vector<Graph> corpus = rock_corpus();
    std::vector<std::optional<RockCertificate>> rocks; // corpus x p, flattened
    RockCaps rock_caps;

    criterion(1, "exact rocks never exceed 2p+1 external degree; K_4 attains it", [&](std::string& detail) {
        long long violations = 0, found = 0;
        for (const Graph& g : corpus)
            for (int p = 1; p <= 3; ++p) {
                auto rock = find_rock_exact(g, p, rock_caps);
                rocks.push_back(rock);
                if (!rock)
                    continue;
                ++found;
                if (rock->max_external_degree > 2 * p + 1)
                    ++violations;
            }
        auto tight = find_rock_exact(gen_complete(4), 1, rock_caps);
        bool tight_ok = tight && tight->max_external_degree == 3;
        detail = std::to_string(violations) + " violations over " + std::to_string(found) + " rocks from "
            + std::to_string(corpus.size()) + " graphs; tight case "
            + (tight_ok ? "attained" : "missed");
        return violations == 0 && tight_ok && found >= 500;
    });

    criterion(2, "exact rocks never have fewer than 2p+1 vertices", [&](std::string& detail) {
        long long violations = 0, found = 0;
        std::size_t idx = 0;
        for (std::size_t gi = 0; gi < corpus.size(); ++gi)
            for (int p = 1; p <= 3; ++p, ++idx) {
                const auto& rock = rocks[idx];
                if (!rock)
                    continue;
                ++found;
                if (static_cast<int>(rock->set.count()) < 2 * p + 1)
                    ++violations;
            }
        detail = std::to_string(violations) + " violations over " + std::to_string(found) + " rocks";
        return violations == 0;
    });

    criterion(3, "matching decompositions verify on random and hand instances", [&](std::string& detail) {
        long long checked = 0, failures = 0;
        Rng rng(7777);
        for (int i = 0; i < 500; ++i) {
            int n = 3 + static_cast<int>(rng.below(16));
            Graph g = gen_gnp(n, 0.1 + 0.08 * (i % 10), rng.next());
            int q = 1 + static_cast<int>(rng.below(4));
            if (!verify_decomposition(g, decompose(g, q)).pass)
                ++failures;
            ++checked;
        }
        // hand instances: star, path, perfect matching
        Graph star = gen_complete_bipartite(1, 5);
        auto ds = decompose(star, 2);
        if (!(verify_decomposition(star, ds).pass && ds.matchings.empty() && ds.residue.size() == 5
                && ds.cover.count() == 2))
            ++failures;
        Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        auto dp = decompose(path, 1);
        if (!(verify_decomposition(path, dp).pass && dp.matchings.size() == 3 && dp.residue.empty()))
            ++failures;
        Graph pm = Graph::from_edges(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
        auto dm = decompose(pm, 2);
        if (!(verify_decomposition(pm, dm).pass && dm.matchings.size() == 2 && dm.residue.size() == 1))
            ++failures;
        checked += 3;
        detail = std::to_string(failures) + " failures over " + std::to_string(checked) + " decompositions";
        return failures == 0;
    });

    criterion(4, "tail bounds majorize Monte-Carlo bad-event frequencies", [&](std::string& detail) {
        const int samples = 100000;
        Rng rng(31337);
        const int m = 64;
        long long bad_matching = 0;
        for (int s = 0; s < samples; ++s) {
            int inside = 0;
            for (int e = 0; e < m; ++e)
                if (rng.coin() && rng.coin())
                    ++inside;
            if (inside <= m / 8)
                ++bad_matching;
        }
        double freq_matching = static_cast<double>(bad_matching) / samples;

        const int verts = 32, d = 8, total = verts * d;
        long long bad_degree = 0;
        for (int s = 0; s < samples; ++s) {
            int sum = 0;
            for (int v = 0; v < verts; ++v)
                if (rng.coin())
                    sum += d;
            if (sum <= total / 4)
                ++bad_degree;
        }
        double freq_degree = static_cast<double>(bad_degree) / samples;

        std::ostringstream os;
        os.precision(5);
        os << "matching " << freq_matching << " <= " << matching_bound(m) << "; degree-sum " << freq_degree
           << " <= " << degree_sum_bound(total, d);
        detail = os.str();
        return freq_matching <= matching_bound(m) && freq_degree <= degree_sum_bound(total, d);
    });

    criterion(5, "good-partition trials succeed at rate >= 0.4 under the q-inequality", [&](std::string& detail) {
        // even cycles are genuine rocks at p=1 (every proper subset induces
        // paths) and decompose into two perfect matchings of q = n/2 edges
        const int seeds = 200;
        int chi_ok = 0;
        {
            const int n = 2048;
            Graph g = cycle_graph(n);
            auto d = decompose(g, n / 2);
            if (d.matchings.size() != 2 || !d.residue.empty() || !q_inequality_holds(n / 2, 7, true))
                return false;
            for (int s = 0; s < seeds; ++s) {
                auto search = find_good_partition(g, g.all_vertices(), Bitset(n), PartitionVariant::Chi, 1, n / 32,
                    static_cast<std::uint64_t>(s), 1, PartitionCheckMode{true, 0});
                if (search.status == GoodPartitionSearch::Status::Found)
                    ++chi_ok;
            }
        }
        int md_ok = 0;
        {
            const int n = 4096;
            Graph g = cycle_graph(n);
            auto d = decompose(g, n / 2);
            if (d.matchings.size() != 2 || !q_inequality_holds(n / 2, 13, false))
                return false;
            for (int s = 0; s < seeds; ++s) {
                auto search = find_good_partition(g, g.all_vertices(), Bitset(n), PartitionVariant::MinDeg, 1,
                    n / 32, static_cast<std::uint64_t>(s), 1, PartitionCheckMode{true, 0});
                if (search.status == GoodPartitionSearch::Status::Found)
                    ++md_ok;
            }
        }
        std::ostringstream os;
        os << "chi-variant " << chi_ok << "/" << seeds << ", mindeg-variant " << md_ok << "/" << seeds;
        detail = os.str();
        return chi_ok >= 80 && md_ok >= 80;
    });

    criterion(6, "exact rock finder matches the all-subsets oracle", [&](std::string& detail) {
        long long checked = 0, mismatches = 0;
        for (int n = 1; n <= 8; ++n) {
            for (const PackedGraph& pg : enumerate_graphs(n)) {
                Graph g = unpack_graph(pg);
                for (int p = 1; p <= 3; ++p) {
                    auto mine = find_rock_exact(g, p, rock_caps);
                    auto ref = naive::find_rock(g, p);
                    ++checked;
                    if (mine.has_value() != ref.has_value()) {
                        ++mismatches;
                        continue;
                    }
                    if (mine) {
                        Bitset refset(static_cast<std::size_t>(n));
                        for (std::uint32_t m = ref->mask; m;) {
                            int v = __builtin_ctz(m);
                            m &= m - 1;
                            refset.set(static_cast<std::size_t>(v));
                        }
                        if (!(mine->set == refset) || mine->internal_edges != ref->edges)
                            ++mismatches;
                    }
                }
            }
        }
        Rng rng(515151);
        for (int i = 0; i < 200; ++i) {
            int n = 9 + static_cast<int>(rng.below(4)); // 9..12
            Graph g = gen_gnp(n, 0.3 + 0.1 * (i % 4), rng.next());
            for (int p = 1; p <= 3; ++p) {
                auto mine = find_rock_exact(g, p, rock_caps);
                auto ref = naive::find_rock(g, p);
                ++checked;
                if (mine.has_value() != ref.has_value()) {
                    ++mismatches;
                    continue;
                }
                if (mine) {
                    Bitset refset(static_cast<std::size_t>(n));
                    for (std::uint32_t m = ref->mask; m;) {
                        int v = __builtin_ctz(m);
                        m &= m - 1;
                        refset.set(static_cast<std::size_t>(v));
                    }
                    if (!(mine->set == refset) || mine->internal_edges != ref->edges)
                        ++mismatches;
                }
            }
        }
        detail = std::to_string(mismatches) + " mismatches over " + std::to_string(checked)
            + " finder/oracle comparisons (canonical corpus through 8 vertices plus 200 random graphs)";
        return mismatches == 0;
    });

    std::vector<PipelineRun> runs = pipeline_runs();

    criterion(7, "pipeline certificates pass out-of-process verification and the oracle agrees",
        [&](std::string& detail) {
            long long certs = 0, cli_failures = 0, oracle_misses = 0;
            for (std::size_t i = 0; i < runs.size(); ++i) {
                const PipelineRun& run = runs[i];
                if (run.outcome.kind != PairSearchOutcome::Kind::Found)
                    continue;
                ++certs;
                const PairCertificate& cert = *run.outcome.certificate;
                if (!verify_pair(run.graph, cert, run.c).pass) {
                    ++cli_failures;
                    continue;
                }
                fs::path gfile = write_file("g" + std::to_string(i) + ".col", run.graph_text);
                fs::path cfile
                    = write_file("c" + std::to_string(i) + ".json", pair_outcome_json(run.outcome).dump(1) + "\n");
                if (run_cli({"verify", "-g", gfile.string(), "--cert", cfile.string()}) != 0)
                    ++cli_failures;
                if (run.graph.vertex_count() <= 12) {
                    BruteMode bm = cert.mode == PairMode::Chi ? BruteMode::Chi : BruteMode::MinDeg;
                    if (!brute_force_pair_at(run.graph, cert.a_denseness, run.c, bm).has_value())
                        ++oracle_misses;
                }
            }
            detail = std::to_string(certs) + " certificates, " + std::to_string(cli_failures)
                + " verification failures, " + std::to_string(oracle_misses) + " oracle contradictions";
            return certs > 10 && cli_failures == 0 && oracle_misses == 0;
        });

    criterion(8, "every failed chi search emits a verifiable proper coloring", [&](std::string& detail) {
        long long traces = 0, invalid = 0;
        for (const PipelineRun& run : runs) {
            if (run.outcome.kind != PairSearchOutcome::Kind::NotFound)
                continue;
            if (!run.outcome.trace || run.outcome.trace->mode != PairMode::Chi)
                continue;
            ++traces;
            if (!verify_bound_trace(run.graph, *run.outcome.trace).pass)
                ++invalid;
        }
        // complete graphs always take the trace path
        for (int n : {8, 10, 12}) {
            Graph g = gen_complete(n);
            auto out = find_pair_chi(g, 1, 1, 2, 3);
            if (out.kind != PairSearchOutcome::Kind::NotFound) {
                detail = "complete graph did not produce a trace";
                return false;
            }
            ++traces;
            if (!verify_bound_trace(g, *out.trace).pass)
                ++invalid;
        }
        detail = std::to_string(invalid) + " invalid colorings over " + std::to_string(traces) + " traces";
        return traces > 0 && invalid == 0;
    });

    criterion(9, "parameter calculators: base case, minimal q, d above every branch", [&](std::string& detail) {
        // independent check of minimal q from 38-digit rational bounds on ln2
        const mpz_class ln2_num("69314718055994530941723212145817656807");
        mpz_class ln2_den;
        mpz_ui_pow_ui(ln2_den.get_mpz_t(), 10, 38);
        auto min_q_rational = [&](long long exponent) -> long long {
            mpz_class factor(static_cast<long>(32 * exponent));
            mpz_class lo = factor * ln2_num / ln2_den;
            mpz_class hi = factor * (ln2_num + 1) / ln2_den;
            if (lo != hi)
                return -1;
            return lo.get_si() + 1;
        };
        for (long long c = 1; c <= 6; ++c)
            if (chi_parameters(2, c).d != 2) {
                detail = "base case violated";
                return false;
            }
        for (long long t : {3LL, 4LL})
            for (long long c : {1LL, 2LL, 3LL}) {
                ChiParameters par = chi_parameters(t, c);
                if (par.q != min_q_rational(4 * par.p + 3) || !q_inequality_holds(par.q, 4 * par.p + 3, true)
                    || q_inequality_holds(par.q - 1, 4 * par.p + 3, true)) {
                    detail = "chi-side q not minimal";
                    return false;
                }
                if (!chi_d_exceeds_branches(par)) {
                    detail = "chi-side d does not clear its branches";
                    return false;
                }
            }
        for (long long t : {1LL, 2LL})
            for (long long c : {1LL, 2LL}) {
                MindegParameters par = mindeg_parameters(t, c);
                if (par.q != min_q_rational(8 * par.p + 5) || !q_inequality_holds(par.q, 8 * par.p + 5, false)
                    || q_inequality_holds(par.q - 1, 8 * par.p + 5, false)) {
                    detail = "mindeg-side q not minimal";
                    return false;
                }
                if (!mindeg_d_exceeds_branches(par)) {
                    detail = "mindeg-side d does not clear its branches";
                    return false;
                }
            }
        detail = "base case d=2, minimal q and d-branch checks all exact";
        return true;
    });

    criterion(10, "tournament oracles match exhaustive enumeration", [&](std::string& detail) {
        long long checked = 0, mismatches = 0;
        for (int n = 1; n <= 6; ++n)
            for (const PackedTournament& pt : enumerate_tournaments(n)) {
                Tournament t = unpack_tournament(pt);
                ++checked;
                if (tournament_chromatic(t) != naive::tournament_chromatic(t)
                    || domination_number(t) != naive::domination_number(t))
                    ++mismatches;
            }
        Rng rng(616161);
        for (int i = 0; i < 100; ++i) {
            int n = 7 + static_cast<int>(rng.below(4)); // 7..10
            Tournament t = gen_random_tournament(n, rng.next());
            ++checked;
            if (tournament_chromatic(t) != naive::tournament_chromatic(t)
                || domination_number(t) != naive::domination_number(t))
                ++mismatches;
        }
        Tournament trans = gen_transitive_tournament(9);
        bool hand = tournament_chromatic(trans) == 1 && domination_number(trans) == 1;
        Tournament tri = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
        hand = hand && tournament_chromatic(tri) == 2 && domination_number(tri) == 2;
        detail = std::to_string(mismatches) + " mismatches over " + std::to_string(checked)
            + " tournaments; transitive and cyclic-triangle values " + (hand ? "exact" : "wrong");
        return mismatches == 0 && hand;
    });

    criterion(11, "complete and complete-bipartite inputs are sound not-founds", [&](std::string& detail) {
        fs::path k12 = write_file("k12.col", serialize_graph(gen_complete(12)));
        fs::path k33 = write_file("k33.col", serialize_graph(gen_complete_bipartite(3, 3)));
        bool ok = true;
        for (long long c : {1LL, 2LL, 3LL}) {
            int rc = run_cli({"find-pair", "--mode", "chi", "-c", std::to_string(c), "-p", "1", "-q", "1", "-g",
                k12.string()});
            ok = ok && rc == 1;
        }
        for (long long c : {1LL, 2LL}) {
            int rc = run_cli({"find-pair", "--mode", "mindeg", "-c", std::to_string(c), "-p", "1", "-q", "1", "-s",
                "4", "-g", k33.string()});
            ok = ok && rc == 1;
        }
        detail = ok ? "every run exited 1 with a trace" : "unexpected exit status";
        return ok;
    });

    criterion(12, "campaign re-runs are byte-identical", [&](std::string& detail) {
        fs::path out1 = g_tmpdir / "campaign-1.json";
        fs::path out2 = g_tmpdir / "campaign-2.json";
        std::string base = "[campaign]\nmode = chi-chi\nt = 3\nc = 1,2\nseed_base = 99\noutput = ";
        std::string rest = "\n\n[generator]\nfamily = gnp\nn_min = 5\nn_max = 7\ncount = 5\nedge-prob = 0.45\n"
                           "\n[caps]\noracle_max_n = 12\n";
        fs::path file1 = write_file("campaign-1.ini", base + out1.string() + rest);
        fs::path file2 = write_file("campaign-2.ini", base + out2.string() + rest);
        if (run_cli({"campaign", "--file", file1.string()}) != 0
            || run_cli({"campaign", "--file", file2.string()}) != 0) {
            detail = "campaign run failed";
            return false;
        }
        std::ifstream a(out1, std::ios::binary), b(out2, std::ios::binary);
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        bool same = !sa.str().empty() && sa.str() == sb.str();
        detail = same ? std::to_string(sa.str().size()) + " bytes identical across runs" : "outputs differ";
        return same;
    });

    std::error_code ec;
    fs::remove_all(g_tmpdir, ec);

    if (g_failures == 0) {
        std::printf("all 12 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
