#ifndef AC_TOURNAMENT_HPP
#define AC_TOURNAMENT_HPP

#include "ac/bitset.hpp"
#include "ac/exact.hpp"
#include "ac/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ac {

struct TournamentCaps {
    int chromatic_max_n = 16;
    int domination_max_n = 16;
    int pair_search_max_n = 14;
};

// Complete orientation of K_n: for every ordered pair exactly one arc.
class Tournament {
public:
    Tournament() : n_(0) {}

    // beats[u] holds the out-neighbourhood of u
    static Tournament from_beats(int n, std::vector<Bitset> beats);
    static Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int vertex_count() const { return n_; }
    bool beats(int u, int v) const { return beats_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    const Bitset& out_neighbors(int v) const { return beats_[static_cast<std::size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(beats_[static_cast<std::size_t>(v)].count()); }

    Bitset all_vertices() const { return Bitset::full(static_cast<std::size_t>(n_)); }

    Tournament induced(const Bitset& s, std::vector<int>* orig_ids = nullptr) const;

private:
    int n_;
    std::vector<Bitset> beats_;
};

// transitive iff out-degrees within s are pairwise distinct
bool is_acyclic(const Tournament& t, const VertexSet& s);

// minimum number of acyclic subsets covering the vertex set
int tournament_chromatic(const Tournament& t, const TournamentCaps& caps = {});
int greedy_acyclic_cover_bound(const Tournament& t);

// minimum |X| with every outside vertex adjacent from some vertex of X
int domination_number(const Tournament& t, const TournamentCaps& caps = {});

// every vertex of b adjacent from every vertex of a; throws on overlap
bool is_complete_to(const Tournament& t, const VertexSet& a, const VertexSet& b);

struct TournamentPairCertificate {
    VertexSet a, b;
    long long chi_a = 0, chi_b = 0;
};

// Exhaustive search for disjoint A complete to B with both chromatic
// numbers >= c; B is taken maximal (all common out-neighbours).
std::optional<TournamentPairCertificate> search_complete_pair(const Tournament& t, long long c,
    const TournamentCaps& caps = {});

// A restricted to three-vertex sets inducing a directed cycle.
std::optional<TournamentPairCertificate> search_cyclic_triangle_pair(const Tournament& t, long long c,
    const TournamentCaps& caps = {});

// Text format: header `t <n>`, then one line per vertex with its 1-based
// out-neighbours; serialization sorts each line ascending.
Tournament parse_tournament(std::string_view text);
std::string serialize_tournament(const Tournament& t);

} // namespace ac

#endif
