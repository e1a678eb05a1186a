#include "ac/generators.hpp"
#include "ac/graph.hpp"
#include "ac/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ac;

namespace {

Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("denseness examples")
{
    Graph k4 = gen_complete(4);
    CHECK(denseness(k4) == Rational(3, 2));

    Bitset empty(4);
    CHECK(denseness(k4, empty) == Rational(0));

    Graph c5 = cycle_graph(5);
    CHECK(denseness(c5) == Rational(1));
}

TEST_CASE("min degree core examples")
{
    Graph c5 = cycle_graph(5);
    CHECK(min_degree_core(c5, 2) == c5.all_vertices());

    Graph star = gen_complete_bipartite(1, 5);
    CHECK(min_degree_core(star, 2).none());

    // triangle plus a pendant: the pendant peels first, the triangle stays
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    std::vector<PeelStep> trace;
    Bitset core = min_degree_core(g, 2, &trace);
    CHECK(core.to_vector() == std::vector<int>{0, 1, 2});
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].vertex == 3);
    CHECK(trace[0].degree_at_removal == 1);
}

TEST_CASE("core output induces min degree >= d and peeled vertices were below d")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_gnp(14, 0.4, seed);
        for (int d = 1; d <= 4; ++d) {
            std::vector<PeelStep> trace;
            Bitset core = min_degree_core(g, d, &trace);
            for (int v = core.first(); v >= 0; v = core.next(v))
                CHECK(g.degree_within(v, core) >= d);
            // replay: each removal happened at degree < d among what was alive
            Bitset alive = g.all_vertices();
            for (const PeelStep& step : trace) {
                CHECK(g.degree_within(step.vertex, alive) == step.degree_at_removal);
                CHECK(step.degree_at_removal < d);
                alive.reset(static_cast<std::size_t>(step.vertex));
            }
            CHECK(alive == core);
        }
    }
}

TEST_CASE("denseness >= d forces a nonempty d-core; min degree >= d gives denseness >= d/2")
{
    int dense_cases = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_gnp(12, 0.55, seed);
        for (int d = 1; d <= 4; ++d) {
            if (denseness(g) >= Rational(d)) {
                CHECK(min_degree_core(g, d).any());
                ++dense_cases;
            }
            Bitset core = min_degree_core(g, d);
            if (core.any())
                CHECK(denseness(g, core) >= Rational(d, 2));
        }
    }
    CHECK(dense_cases > 0);
}

TEST_CASE("anticompleteness")
{
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
    Bitset a(6), b(6);
    a.set(0);
    a.set(1);
    a.set(2);
    b.set(3);
    b.set(4);
    CHECK(are_anticomplete(g, a, b));
    CHECK(are_anticomplete(g, b, a));

    Bitset overlap(6);
    overlap.set(2);
    overlap.set(3);
    CHECK_FALSE(are_anticomplete(g, a, overlap));

    Graph p3 = path_graph(3);
    Bitset left(3), right(3);
    left.set(0);
    right.set(2);
    CHECK(are_anticomplete(p3, left, right));
}

TEST_CASE("anticompleteness is symmetric on random instances")
{
    Rng rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = gen_gnp(10, 0.3, rng.next());
        Bitset a(10), b(10);
        for (int v = 0; v < 10; ++v) {
            switch (rng.below(3)) {
            case 0:
                a.set(static_cast<std::size_t>(v));
                break;
            case 1:
                b.set(static_cast<std::size_t>(v));
                break;
            default:
                break;
            }
        }
        CHECK(are_anticomplete(g, a, b) == are_anticomplete(g, b, a));
    }
}

TEST_CASE("edge list parsing")
{
    Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(denseness(k3) == Rational(1));

    Graph isolated = parse_graph("p edge 2 0\n");
    CHECK(isolated.vertex_count() == 2);
    CHECK(isolated.edge_count() == 0);

    Graph commented = parse_graph("c a comment\n\np edge 2 1\nc mid\ne 1 2\n");
    CHECK(commented.edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 5\n"), ParseError);        // out of range
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nbogus\n"), ParseError);        // malformed
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);                    // no header
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n"), ParseError);        // count mismatch
    try {
        parse_graph("p edge 3 2\ne 1 2\ne 9 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("serialization round-trips canonically")
{
    Rng rng(99);
    for (int round = 0; round < 20; ++round) {
        Graph g = gen_gnp(20, 0.25, rng.next());
        std::string text = serialize_graph(g);
        Graph back = parse_graph(text);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
        CHECK(serialize_graph(back) == text);

        // scrambled, flipped edge lines parse to the same canonical bytes
        std::vector<std::pair<int, int>> shuffled = g.edge_list();
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        std::string scrambled = "p edge 20 " + std::to_string(shuffled.size()) + "\n";
        for (auto [u, v] : shuffled)
            scrambled += "e " + std::to_string(v + 1) + " " + std::to_string(u + 1) + "\n";
        CHECK(serialize_graph(parse_graph(scrambled)) == text);
    }
}

TEST_CASE("induced subgraph keeps edge structure")
{
    Graph g = gen_gnp(12, 0.5, 5);
    Bitset s(12);
    for (int v : {1, 3, 4, 7, 10})
        s.set(static_cast<std::size_t>(v));
    std::vector<int> ids;
    Graph h = g.induced(s, &ids);
    CHECK(h.vertex_count() == 5);
    CHECK(ids == std::vector<int>{1, 3, 4, 7, 10});
    long long m = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.has_edge(ids[i], ids[j])) {
                CHECK(h.has_edge(static_cast<int>(i), static_cast<int>(j)));
                ++m;
            }
    CHECK(h.edge_count() == m);
    CHECK(g.edges_within(s) == m);
}

TEST_CASE("bitset order: the smaller element of the symmetric difference wins")
{
    Rng rng(3);
    for (int round = 0; round < 300; ++round) {
        Bitset a(20), b(20);
        for (int v = 0; v < 20; ++v) {
            if (rng.coin())
                a.set(static_cast<std::size_t>(v));
            if (rng.coin())
                b.set(static_cast<std::size_t>(v));
        }
        Bitset sym = (a - b) | (b - a);
        bool expect = sym.any() && a.test(static_cast<std::size_t>(sym.first()));
        CHECK(Bitset::lex_less(a, b) == expect);
        // same-size sets compare like their sorted vertex sequences
        if (a.count() == b.count() && a != b)
            CHECK(Bitset::lex_less(a, b) == (a.to_vector() < b.to_vector()));
    }
}
