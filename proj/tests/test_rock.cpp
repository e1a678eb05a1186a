#include "ac/generators.hpp"
#include "ac/rng.hpp"
#include "ac/rock.hpp"

#include <doctest.h>

#include "naive.hpp"

using namespace ac;

namespace {

Graph disjoint_triangles(int k)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int b = 3 * i;
        edges.emplace_back(b, b + 1);
        edges.emplace_back(b + 1, b + 2);
        edges.emplace_back(b, b + 2);
    }
    return Graph::from_edges(3 * k, edges);
}

Graph random_forest(int n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        if (rng.coin())
            edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    return Graph::from_edges(n, edges);
}

VertexSet mask_to_set(std::uint32_t mask, std::size_t n)
{
    Bitset b(n);
    for (std::uint32_t m = mask; m;) {
        int v = __builtin_ctz(m);
        m &= m - 1;
        b.set(static_cast<std::size_t>(v));
    }
    return b;
}

} // namespace

TEST_CASE("exact finder examples")
{
    // a triangle component with nothing denser: the rock is that triangle
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}});
    auto rock = find_rock_exact(g, 1);
    REQUIRE(rock.has_value());
    CHECK(rock->set.to_vector() == std::vector<int>{0, 1, 2});
    CHECK(rock->internal_edges == 3);
    CHECK(rock->mode == RockMode::Exact);

    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK_FALSE(find_rock_exact(random_forest(12, seed), 1).has_value());

    // lexicographic tie-break between the two triangles
    auto two = find_rock_exact(disjoint_triangles(2), 1);
    REQUIRE(two.has_value());
    CHECK(two->set.to_vector() == std::vector<int>{0, 1, 2});
}

TEST_CASE("exact finder agrees with the all-subsets oracle")
{
    Rng rng(21);
    for (int round = 0; round < 120; ++round) {
        int n = 5 + static_cast<int>(rng.below(6)); // 5..10
        Graph g = gen_gnp(n, 0.25 + 0.12 * static_cast<double>(round % 5), rng.next());
        for (int p = 1; p <= 3; ++p) {
            auto mine = find_rock_exact(g, p);
            auto ref = naive::find_rock(g, p);
            REQUIRE(mine.has_value() == ref.has_value());
            if (mine) {
                CHECK(mine->set == mask_to_set(ref->mask, static_cast<std::size_t>(n)));
                CHECK(mine->internal_edges == ref->edges);
            }
        }
    }
}

TEST_CASE("exact rocks satisfy the size and external degree bounds")
{
    Rng rng(22);
    int found = 0;
    for (int round = 0; round < 120; ++round) {
        Graph g = gen_gnp(12, 0.5, rng.next());
        for (int p = 1; p <= 3; ++p) {
            auto rock = find_rock_exact(g, p);
            if (!rock)
                continue;
            ++found;
            CHECK(static_cast<int>(rock->set.count()) >= 2 * p + 1);
            CHECK(rock->max_external_degree <= 2 * p + 1);
            // dropping any vertex of the rock breaks the threshold
            for (int v = rock->set.first(); v >= 0; v = rock->set.next(v)) {
                Bitset smaller = rock->set;
                smaller.reset(static_cast<std::size_t>(v));
                CHECK(g.edges_within(smaller)
                    < static_cast<long long>(p) * (static_cast<long long>(rock->set.count()) - 1));
            }
        }
    }
    CHECK(found > 50);
}

TEST_CASE("verify_rock accepts valid certificates and the tight external case")
{
    Graph k4 = gen_complete(4);
    // any 3-subset of K_4 is a valid exact rock; the outside vertex sees 3 = 2p+1
    Bitset a(4);
    a.set(1);
    a.set(2);
    a.set(3);
    RockCertificate cert{a, 1, 3, RockMode::Exact, 3};
    RockAudit audit = verify_rock(k4, cert);
    CHECK(audit.pass);
    CHECK(audit.recomputed_external == 3);

    RockCertificate tampered = cert;
    tampered.internal_edges = 5;
    CHECK_FALSE(verify_rock(k4, tampered).pass);

    RockCertificate oversized = cert;
    oversized.set = k4.all_vertices();
    oversized.internal_edges = 6;
    oversized.max_external_degree = 0;
    CHECK_FALSE(verify_rock(k4, oversized).pass); // a smaller set qualifies
}

TEST_CASE("verify_rock passes on every found certificate")
{
    Rng rng(23);
    for (int round = 0; round < 260; ++round) {
        Graph g = gen_gnp(8 + static_cast<int>(rng.below(4)), 0.5, rng.next());
        for (int p = 1; p <= 2; ++p) {
            auto rock = find_rock_exact(g, p);
            if (rock)
                CHECK(verify_rock(g, *rock).pass);
            auto heur = find_rock_heuristic(g, p);
            if (heur)
                CHECK(verify_rock(g, *heur).pass);
        }
    }
}

TEST_CASE("heuristic finder examples")
{
    Graph triangle = disjoint_triangles(1);
    auto h = find_rock_heuristic(triangle, 1);
    REQUIRE(h.has_value());
    CHECK(h->set == triangle.all_vertices());
    CHECK(h->mode == RockMode::HeuristicMinimal);

    // K_5 with a pendant path: the result is a dense subset of the K_5
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            edges.emplace_back(i, j);
    edges.emplace_back(4, 5);
    edges.emplace_back(5, 6);
    Graph g = Graph::from_edges(7, edges);
    auto rock = find_rock_heuristic(g, 1);
    REQUIRE(rock.has_value());
    Bitset k5(7);
    for (int v = 0; v < 5; ++v)
        k5.set(static_cast<std::size_t>(v));
    CHECK(rock->set.subset_of(k5));
    CHECK(rock->internal_edges >= static_cast<long long>(rock->set.count()));
}

TEST_CASE("heuristic existence verdict is exact and its sets are never smaller than the optimum")
{
    Rng rng(24);
    for (int round = 0; round < 150; ++round) {
        int n = 4 + static_cast<int>(rng.below(7)); // 4..10
        Graph g = gen_gnp(n, 0.35, rng.next());
        for (int p = 1; p <= 3; ++p) {
            bool exists = naive::dense_subset_exists(g, p);
            CHECK(dense_subset_exists(g, p) == exists);
            auto heur = find_rock_heuristic(g, p);
            CHECK(heur.has_value() == exists);
            if (!heur)
                continue;
            long long sz = static_cast<long long>(heur->set.count());
            CHECK(heur->internal_edges >= static_cast<long long>(p) * sz);
            auto exact = naive::find_rock(g, p);
            CHECK(sz >= __builtin_popcount(exact->mask));
            // inclusion-minimal: no single removal survives
            for (int v = heur->set.first(); v >= 0; v = heur->set.next(v)) {
                Bitset smaller = heur->set;
                smaller.reset(static_cast<std::size_t>(v));
                if (smaller.any())
                    CHECK(g.edges_within(smaller) < static_cast<long long>(p) * (sz - 1));
            }
        }
    }
}

TEST_CASE("peeling examples")
{
    auto [seq, residual] = peel_rocks(disjoint_triangles(4), 1, 3);
    CHECK(seq.rocks.size() == 4);
    CHECK_FALSE(seq.residual_rock_size.has_value());
    Graph g = disjoint_triangles(4);
    CHECK(g.edges_within(residual) == 0);

    auto [fseq, fresidual] = peel_rocks(random_forest(12, 3), 1, 5);
    CHECK(fseq.rocks.empty());
    CHECK(fresidual.count() == 12);
}

TEST_CASE("peeled rocks are disjoint rocks of their residuals and peeling is maximal")
{
    Rng rng(25);
    for (int round = 0; round < 25; ++round) {
        Graph g = gen_gnp(13, 0.45, rng.next());
        int p = 1 + static_cast<int>(rng.below(2));
        int s = 4 + static_cast<int>(rng.below(4));
        auto [seq, residual] = peel_rocks(g, p, s);
        Bitset alive = g.all_vertices();
        for (const RockCertificate& rock : seq.rocks) {
            CHECK(rock.set.subset_of(alive));
            CHECK(static_cast<int>(rock.set.count()) <= s);
            CHECK(verify_rock(g, rock, {}, &alive).pass);
            alive -= rock.set;
        }
        CHECK(alive == residual);
        auto again = find_rock_exact(g, p, {}, &residual);
        if (seq.residual_rock_size) {
            REQUIRE(again.has_value());
            CHECK(static_cast<int>(again->set.count()) == *seq.residual_rock_size);
            CHECK(*seq.residual_rock_size > s);
        } else {
            CHECK_FALSE(again.has_value());
        }
    }
}

TEST_CASE("peeling drains planted dense pockets and leaves none behind")
{
    // three K_5 pockets wired together by a sparse random background
    Rng rng(26);
    std::vector<std::pair<int, int>> edges;
    for (int pocket = 0; pocket < 3; ++pocket) {
        int base = 5 * pocket;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                edges.emplace_back(base + i, base + j);
    }
    for (int v = 15; v < 20; ++v)
        edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    Graph g = Graph::from_edges(20, edges);

    auto [seq, residual] = peel_rocks(g, 2, 5);
    CHECK(seq.rocks.size() == 3);
    Bitset alive = g.all_vertices();
    for (const RockCertificate& rock : seq.rocks) {
        CHECK(verify_rock(g, rock, {}, &alive).pass);
        alive -= rock.set;
    }
    // the residual genuinely has no small rock: the finder is its own oracle
    CHECK_FALSE(find_rock_exact(g, 2, {}, &residual).has_value());
    CHECK_FALSE(seq.residual_rock_size.has_value());
}

TEST_CASE("the exact cap rejects oversized scopes")
{
    RockCaps caps;
    caps.exact_max_n = 8;
    Graph g = gen_gnp(9, 0.5, 1);
    CHECK_THROWS_AS(find_rock_exact(g, 1, caps), CapExceeded);
    CHECK_NOTHROW(find_rock_heuristic(g, 1));
}
