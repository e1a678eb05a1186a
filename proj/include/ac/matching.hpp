#ifndef AC_MATCHING_HPP
#define AC_MATCHING_HPP

#include "ac/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ac {

using EdgeList = std::vector<std::pair<int, int>>;

// Partition of E(G[scope]) into q-matchings plus a residue whose edges all
// meet a cover X with |X| <= 2q-2.
struct MatchingDecomposition {
    int q = 1;
    VertexSet scope;   // the vertex set whose induced edges are decomposed
    VertexSet cover;   // X
    EdgeList residue;  // M_0
    std::vector<EdgeList> matchings; // M_1..M_n, each of cardinality exactly q
};

struct DecompositionAudit {
    bool pass = true;
    std::string failure;
    std::optional<std::pair<int, int>> witness_edge;
    int witness_matching = -1;
};

// Iterative realization of the greedy recursion: while a maximal matching
// (greedy over the lexicographic edge order) has at least q edges, remove
// its q lexicographically first edges as the next matching; the endpoints
// of the final maximal matching become the cover.
MatchingDecomposition decompose(const Graph& g, int q, const VertexSet* scope = nullptr);

DecompositionAudit verify_decomposition(const Graph& g, const MatchingDecomposition& d);

} // namespace ac

#endif
