#ifndef AC_GENERATORS_HPP
#define AC_GENERATORS_HPP

#include "ac/graph.hpp"
#include "ac/tournament.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace ac {

Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_gnp(int n, double edge_prob, std::uint64_t seed);

// iterated Mycielski construction starting from K_2 (0 iterations = K_2)
Graph gen_mycielski(int iterations);

// vertices are the k-subsets of {0..n-1}, adjacent when disjoint
Graph gen_kneser(int n, int k);

// vertices are the ordered pairs (i,j), i<j<n; (i,j)~(j,k)
Graph gen_shift(int n);

Tournament gen_random_tournament(int n, std::uint64_t seed);
Tournament gen_transitive_tournament(int n);

struct GeneratorOutput {
    std::variant<Graph, Tournament> object;
    std::string description; // embedded as comment metadata
};

// family in {complete, complete-bipartite, gnp, mycielski, kneser, shift,
// random-tournament}; parameters by name, unknown names rejected
GeneratorOutput generate(const std::string& family, const std::map<std::string, std::string>& params,
    std::uint64_t seed);

} // namespace ac

#endif
