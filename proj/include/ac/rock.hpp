#ifndef AC_ROCK_HPP
#define AC_ROCK_HPP

#include "ac/exact.hpp"
#include "ac/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ac {

struct RockCaps {
    // exact finder enumerates subsets of the search scope; refuse beyond this
    int exact_max_n = 26;
};

enum class RockMode { Exact, HeuristicMinimal };

// A p-rock certificate: nonempty A with |E(G[A])| >= p|A|. Exact mode
// additionally certifies |A| globally minimum and edge count maximum among
// qualifying sets of that size, which forces every external vertex to have
// at most 2p+1 neighbours in A.
struct RockCertificate {
    VertexSet set;
    int p = 1;
    long long internal_edges = 0;
    RockMode mode = RockMode::Exact;
    int max_external_degree = 0;
};

struct RockAudit {
    bool pass = true;
    std::string failure;
    int witness_vertex = -1;
    std::vector<int> witness_subset;
    long long recomputed_edges = 0;
    int recomputed_external = 0;
};

// The search scope is `within` when given (external degrees are measured
// against within \ A), otherwise the whole vertex set.
std::optional<RockCertificate> find_rock_exact(const Graph& g, int p, const RockCaps& caps = {},
    const VertexSet* within = nullptr);

std::optional<RockCertificate> find_rock_heuristic(const Graph& g, int p, const VertexSet* within = nullptr);

RockAudit verify_rock(const Graph& g, const RockCertificate& cert, const RockCaps& caps = {},
    const VertexSet* within = nullptr);

struct PeelSequence {
    std::vector<RockCertificate> rocks;
    int size_cap = 0;
    // size of the residual graph's rock when one exists past the cap;
    // absent means the residual has no rock at all
    std::optional<int> residual_rock_size;
};

struct PeelResult {
    PeelSequence sequence;
    VertexSet residual;
};

// Repeatedly extract rocks of size <= s until none remains; each rock is a
// rock of the graph restricted to what survives the earlier extractions.
PeelResult peel_rocks(const Graph& g, int p, int s, const RockCaps& caps = {});

// True iff some nonempty subset of the scope has denseness >= p. Exact
// (max-flow based) and independent of the enumerating finder.
bool dense_subset_exists(const Graph& g, int p, const VertexSet* within = nullptr);

} // namespace ac

#endif
