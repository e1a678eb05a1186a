#ifndef AC_ENUMERATE_HPP
#define AC_ENUMERATE_HPP

#include "ac/graph.hpp"
#include "ac/tournament.hpp"

#include <cstdint>
#include <vector>

namespace ac {

// Small graphs packed as an upper-triangle edge mask, one bit per pair
// (i<j) in lexicographic pair order. Usable up to 11 vertices (55 bits).
struct PackedGraph {
    int n = 0;
    std::uint64_t mask = 0;

    bool operator==(const PackedGraph&) const = default;
};

std::uint64_t pack_edge_bit(int n, int u, int v);
PackedGraph pack_graph(const Graph& g);
Graph unpack_graph(const PackedGraph& pg);

// Canonical representative of the isomorphism class: iterated degree
// refinement orders the vertices into cells, then the edge mask is
// minimized over the orderings consistent with the cells.
PackedGraph canonical_form(const PackedGraph& pg);

// All graphs on exactly n vertices up to isomorphism, built by vertex
// augmentation with canonical deduplication.
std::vector<PackedGraph> enumerate_graphs(int n);

// Tournaments packed the same way; bit set means the lower-indexed vertex
// beats the higher one.
struct PackedTournament {
    int n = 0;
    std::uint64_t mask = 0;

    bool operator==(const PackedTournament&) const = default;
};

PackedTournament pack_tournament(const Tournament& t);
Tournament unpack_tournament(const PackedTournament& pt);
PackedTournament canonical_form(const PackedTournament& pt);
std::vector<PackedTournament> enumerate_tournaments(int n);

} // namespace ac

#endif
