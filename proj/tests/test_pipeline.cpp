#include "ac/generators.hpp"
#include "ac/json_io.hpp"
#include "ac/pipeline.hpp"
#include "ac/rng.hpp"

#include <doctest.h>

#include "naive.hpp"

using namespace ac;

namespace {

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

} // namespace

TEST_CASE("brute-force oracle examples")
{
    Graph triangles = disjoint_cliques(3, 2);
    auto pair = brute_force_pair(triangles, 3, BruteMode::ChiChi);
    REQUIRE(pair.has_value());
    CHECK(pair->first.count() == 3);
    CHECK(pair->second.count() == 3);
    CHECK(are_anticomplete(triangles, pair->first, pair->second));

    CHECK_FALSE(brute_force_pair(gen_complete(6), 1, BruteMode::ChiChi).has_value());
    CHECK_FALSE(brute_force_pair(gen_complete(6), 1, BruteMode::MinDeg).has_value());
    CHECK_THROWS_AS(brute_force_pair(gen_gnp(15, 0.5, 1), 1, BruteMode::Chi, 14), CapExceeded);
}

TEST_CASE("brute-force oracle agrees with double subset enumeration")
{
    Rng rng(51);
    for (int round = 0; round < 40; ++round) {
        int n = 4 + static_cast<int>(rng.below(5)); // 4..8
        Graph g = gen_gnp(n, 0.25 + 0.1 * static_cast<double>(round % 5), rng.next());
        for (long long c = 1; c <= 2; ++c) {
            CHECK(brute_force_pair(g, c, BruteMode::MinDeg).has_value()
                == naive::pair_exists(g, c, naive::PairKind::DenseDense));
            CHECK(brute_force_pair(g, c, BruteMode::Chi).has_value()
                == naive::pair_exists(g, c, naive::PairKind::DenseChromatic));
            CHECK(brute_force_pair(g, c, BruteMode::ChiChi).has_value()
                == naive::pair_exists(g, c, naive::PairKind::ChromaticChromatic));
        }
    }
}

TEST_CASE("brute-force witnesses satisfy the mode's conditions")
{
    Rng rng(52);
    for (int round = 0; round < 30; ++round) {
        Graph g = gen_gnp(9, 0.3, rng.next());
        for (long long c = 1; c <= 2; ++c) {
            auto dd = brute_force_pair(g, c, BruteMode::MinDeg);
            if (dd) {
                CHECK(are_anticomplete(g, dd->first, dd->second));
                CHECK(denseness(g, dd->first) >= Rational(c));
                CHECK(denseness(g, dd->second) >= Rational(c));
            }
            auto dc = brute_force_pair(g, c, BruteMode::Chi);
            if (dc) {
                CHECK(are_anticomplete(g, dc->first, dc->second));
                CHECK(denseness(g, dc->first) >= Rational(c));
                CHECK(chromatic_number(g.induced(dc->second)) >= c);
            }
        }
    }
}

TEST_CASE("chi pipeline finds the far component of two cliques")
{
    Graph g = disjoint_cliques(8, 2);
    PairSearchOutcome out = find_pair_chi(g, 1, 1, 2, 0);
    REQUIRE(out.kind == PairSearchOutcome::Kind::Found);
    const PairCertificate& cert = *out.certificate;
    CHECK(cert.b_chromatic == 8);
    CHECK(cert.a_denseness >= cert.a_required);
    CHECK(verify_pair(g, cert, 2).pass);
    // the b side is exactly the untouched clique
    Bitset second(16);
    for (int v = 8; v < 16; ++v)
        second.set(static_cast<std::size_t>(v));
    CHECK(cert.b == second);
}

TEST_CASE("chi pipeline on a complete graph yields a valid bound trace")
{
    Graph k12 = gen_complete(12);
    PairSearchOutcome out = find_pair_chi(k12, 1, 1, 2, 7);
    REQUIRE(out.kind == PairSearchOutcome::Kind::NotFound);
    REQUIRE(out.trace.has_value());
    CHECK(verify_bound_trace(k12, *out.trace).pass);
    CHECK(out.trace->color_count >= 12); // any proper coloring needs 12

    // every c >= 1 stays not-found on complete graphs
    for (long long c = 1; c <= 3; ++c) {
        PairSearchOutcome again = find_pair_chi(k12, 1, 1, c, 7);
        CHECK(again.kind == PairSearchOutcome::Kind::NotFound);
    }
}

TEST_CASE("edgeless input is a no-rock error")
{
    PairSearchOutcome chi = find_pair_chi(Graph(8), 1, 1, 1, 0);
    CHECK(chi.kind == PairSearchOutcome::Kind::Error);
    CHECK(chi.error_code == "no-rock");
    PairSearchOutcome md = find_pair_mindeg(Graph(8), 1, 1, 4, 1, 0);
    CHECK(md.kind == PairSearchOutcome::Kind::Error);
    CHECK(md.error_code == "no-rock");
}

TEST_CASE("mindeg pipeline pairs a peeled rock with the far clique")
{
    Graph g = disjoint_cliques(9, 2);
    PairSearchOutcome out = find_pair_mindeg(g, 2, 2, 9, 2, 0);
    REQUIRE(out.kind == PairSearchOutcome::Kind::Found);
    const PairCertificate& cert = *out.certificate;
    CHECK(cert.route == "peeled-rock-complement");
    CHECK(cert.a_denseness >= Rational(2));
    CHECK(cert.b_denseness >= Rational(2));
    CHECK(verify_pair(g, cert, 2).pass);
}

TEST_CASE("mindeg pipeline on complete bipartite graphs reports not-found")
{
    Graph k33 = gen_complete_bipartite(3, 3);
    for (long long c = 1; c <= 2; ++c) {
        PairSearchOutcome out = find_pair_mindeg(k33, 1, 1, 4, c, 0);
        CHECK(out.kind == PairSearchOutcome::Kind::NotFound);
        REQUIRE(out.trace.has_value());
        CHECK(out.trace->failed_step == "residual-no-rock");
    }
}

TEST_CASE("pipeline success implies oracle success at the certified levels")
{
    Rng rng(53);
    int found = 0;
    for (int round = 0; round < 60; ++round) {
        int n = 8 + static_cast<int>(rng.below(5)); // 8..12
        Graph g = gen_gnp(n, 0.45, rng.next());
        for (long long c = 1; c <= 2; ++c) {
            PairSearchOutcome chi = find_pair_chi(g, 1, 1, c, rng.next());
            if (chi.kind == PairSearchOutcome::Kind::Found) {
                ++found;
                CHECK(verify_pair(g, *chi.certificate, c).pass);
                CHECK(brute_force_pair_at(g, chi.certificate->a_denseness, c, BruteMode::Chi).has_value());
            }
            PairSearchOutcome md = find_pair_mindeg(g, 1, 1, 5, c, rng.next());
            if (md.kind == PairSearchOutcome::Kind::Found) {
                ++found;
                CHECK(verify_pair(g, *md.certificate, c).pass);
                CHECK(brute_force_pair_at(g, md.certificate->a_denseness, c, BruteMode::MinDeg).has_value());
            }
        }
    }
    CHECK(found > 0);
}

TEST_CASE("failed chi searches always emit verifiable traces")
{
    Rng rng(54);
    int traces = 0;
    for (int round = 0; round < 40; ++round) {
        int n = 6 + static_cast<int>(rng.below(6));
        Graph g = gen_gnp(n, 0.5, rng.next());
        PairSearchOutcome out = find_pair_chi(g, 1, 1, 3, rng.next());
        if (out.kind == PairSearchOutcome::Kind::NotFound) {
            ++traces;
            CHECK(verify_bound_trace(g, *out.trace).pass);
        }
    }
    CHECK(traces > 0);
}

TEST_CASE("a cycle is its own rock and the trace covers just that piece")
{
    // every proper subset of a cycle induces paths, so at p=1 the rock is
    // the entire cycle and nothing is left for a far side
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i)
        edges.emplace_back(i, (i + 1) % 7);
    Graph c7 = Graph::from_edges(7, edges);
    PairSearchOutcome out = find_pair_chi(c7, 1, 1, 1, 0);
    REQUIRE(out.kind == PairSearchOutcome::Kind::NotFound);
    CHECK(out.trace->rock == c7.all_vertices());
    CHECK(verify_bound_trace(c7, *out.trace).pass);
    CHECK(out.trace->color_count == 3); // the rock piece is colored exactly
}

TEST_CASE("oversized index families fall back to sampled scans")
{
    // p=3 makes the mindeg family C(28,14), far over the exhaustive cap
    Graph big = disjoint_cliques(12, 2);
    PairSearchOutcome found = find_pair_mindeg(big, 3, 2, 5, 2, 1);
    REQUIRE(found.kind == PairSearchOutcome::Kind::Found);
    CHECK(found.certificate->route == "index-scan");
    CHECK(verify_pair(big, *found.certificate, 2).pass);

    // on a complete graph every scan branch dies, and a sampled scan cannot
    // claim a sound not-found
    Graph k20 = gen_complete(20);
    PairSearchOutcome out = find_pair_mindeg(k20, 3, 2, 5, 2, 1);
    CHECK(out.kind == PairSearchOutcome::Kind::Error);
    CHECK(out.error_code == "sampled-scan-inconclusive");
}

TEST_CASE("verify_pair rejects tampered certificates")
{
    Graph g = disjoint_cliques(8, 2);
    PairSearchOutcome out = find_pair_chi(g, 1, 1, 2, 0);
    REQUIRE(out.kind == PairSearchOutcome::Kind::Found);
    PairCertificate cert = *out.certificate;

    PairCertificate crossing = cert;
    crossing.b.set(static_cast<std::size_t>(cert.a.first())); // overlap
    CHECK_FALSE(verify_pair(g, crossing, 2).pass);

    // an edge between the sides: graft a vertex adjacent to the a side
    PairCertificate touching = cert;
    Bitset aside = cert.a;
    Bitset nb = g.neighbors(aside.first()) - aside;
    REQUIRE(nb.any());
    touching.b.set(static_cast<std::size_t>(nb.first()));
    PairAudit audit = verify_pair(g, touching, 2);
    CHECK_FALSE(audit.pass);
    CHECK(audit.witness_edge.has_value());

    // demanding more than the witness provides fails
    CHECK_FALSE(verify_pair(g, cert, cert.b_chromatic + 1).pass);

    // misstated witnesses fail
    PairCertificate inflated = cert;
    inflated.b_chromatic += 1;
    CHECK_FALSE(verify_pair(g, inflated, 2).pass);
}

TEST_CASE("pair certificates survive a JSON round trip")
{
    Graph g = disjoint_cliques(8, 2);
    PairSearchOutcome out = find_pair_chi(g, 1, 1, 2, 0);
    REQUIRE(out.kind == PairSearchOutcome::Kind::Found);
    Json j = pair_certificate_json(*out.certificate);
    PairCertificate back = pair_certificate_from_json(Json::parse(j.dump()));
    CHECK(back.a == out.certificate->a);
    CHECK(back.b == out.certificate->b);
    CHECK(back.a_denseness == out.certificate->a_denseness);
    CHECK(back.b_chromatic == out.certificate->b_chromatic);
    CHECK(verify_pair(g, back, 2).pass);
}
