#include "ac/exact.hpp"
#include "ac/generators.hpp"
#include "ac/pipeline.hpp"

#include <doctest.h>

#include "naive.hpp"

using namespace ac;

TEST_CASE("mycielski iterations from K_2")
{
    Graph k2 = gen_mycielski(0);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    Graph c5 = gen_mycielski(1);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(chromatic_number(c5) == 3);
    CHECK(clique_number(c5) == 2);

    Graph grotzsch = gen_mycielski(2);
    CHECK(grotzsch.vertex_count() == 11);
    CHECK(grotzsch.edge_count() == 20);
    CHECK(chromatic_number(grotzsch) == 4);
    CHECK(clique_number(grotzsch) == 2);
}

TEST_CASE("kneser(5,2) is the Petersen graph")
{
    Graph petersen = gen_kneser(5, 2);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(petersen.degree(v) == 3);
    CHECK(chromatic_number(petersen) == 3);
    CHECK(clique_number(petersen) == 2);

    CHECK_THROWS_AS(gen_kneser(5, 3), GraphError);
    CHECK_THROWS_AS(gen_kneser(4, 0), GraphError);
}

TEST_CASE("shift graphs have logarithmic chromatic number")
{
    Graph s4 = gen_shift(4);
    CHECK(s4.vertex_count() == 6);
    CHECK(chromatic_number(s4) == 2);
    Graph s8 = gen_shift(8);
    CHECK(s8.vertex_count() == 28);
    CHECK(chromatic_number(s8) == 3);
    // triangle-free: a triangle needs (i,j),(j,k),(k,l) to close, impossible
    CHECK(naive::clique_number(gen_shift(6)) == 2);
}

TEST_CASE("complete bipartite graphs have no dense anticomplete pair")
{
    Graph k33 = gen_complete_bipartite(3, 3);
    CHECK(biclique_number(k33) == 3);
    CHECK_FALSE(brute_force_pair(k33, 1, BruteMode::MinDeg).has_value());
}

TEST_CASE("gnp and random tournaments are seed-deterministic")
{
    Graph a = gen_gnp(15, 0.35, 0);
    Graph b = gen_gnp(15, 0.35, 0);
    CHECK(serialize_graph(a) == serialize_graph(b));
    Graph c = gen_gnp(15, 0.35, 1);
    CHECK(serialize_graph(a) != serialize_graph(c));

    Tournament t1 = gen_random_tournament(9, 4);
    Tournament t2 = gen_random_tournament(9, 4);
    CHECK(serialize_tournament(t1) == serialize_tournament(t2));
}

TEST_CASE("generator dispatch embeds metadata and validates families")
{
    GeneratorOutput out = generate("gnp", {{"n", "10"}, {"edge-prob", "0.5"}}, 3);
    CHECK(std::holds_alternative<Graph>(out.object));
    CHECK(out.description.find("gnp") == 0);

    GeneratorOutput tour = generate("random-tournament", {{"n", "6"}}, 3);
    CHECK(std::holds_alternative<Tournament>(tour.object));

    CHECK_THROWS_AS(generate("noise", {}, 0), GraphError);
    CHECK_THROWS_AS(generate("gnp", {{"n", "5"}}, 0), GraphError); // missing edge-prob
}
