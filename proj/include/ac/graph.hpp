#ifndef AC_GRAPH_HPP
#define AC_GRAPH_HPP

#include "ac/bitset.hpp"
#include "ac/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ac {

// A vertex subset of some host graph; capacity always equals the host's
// vertex count.
using VertexSet = Bitset;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : GraphError {
    int line;
    ParseError(int line_, const std::string& msg)
        : GraphError("line " + std::to_string(line_) + ": " + msg), line(line_)
    {
    }
};

// Simple undirected graph over dense vertex indices 0..n-1 with bitset
// adjacency and a cached edge count. Instances are immutable once built.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }

    VertexSet all_vertices() const { return Bitset::full(static_cast<std::size_t>(n_)); }

    long long edges_within(const VertexSet& s) const;
    int degree_within(int v, const VertexSet& s) const
    {
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].count_and(s));
    }

    // Sorted lexicographic edge list (u < v).
    std::vector<std::pair<int, int>> edge_list() const;
    std::vector<std::pair<int, int>> edge_list_within(const VertexSet& s) const;

    // Induced subgraph; if orig_ids is non-null it receives the original
    // vertex index of each new vertex, ascending.
    Graph induced(const VertexSet& s, std::vector<int>* orig_ids = nullptr) const;

private:
    int n_;
    long long m_;
    std::vector<Bitset> adj_;
};

// |E(G[a])| / |a| as an exact rational; 0 for the empty set.
Rational denseness(const Graph& g, const VertexSet& a);
inline Rational denseness(const Graph& g) { return denseness(g, g.all_vertices()); }

struct PeelStep {
    int vertex;
    int degree_at_removal;
};

// The unique maximal subset inducing minimum degree >= d (iterated peeling
// of vertices of degree < d). Empty if none survives. The optional trace
// records each removal and the vertex's degree at that moment.
VertexSet min_degree_core(const Graph& g, int d, std::vector<PeelStep>* trace = nullptr);

// True iff a and b are disjoint and no edge joins them.
bool are_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);

// Edge-list text format: header `p edge <n> <m>`, then `e <u> <v>` with
// 1-based endpoints; `c` lines and blank lines are ignored. Serialization
// is canonical: edges sorted lexicographically.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

void require_host(const Graph& g, const VertexSet& s, const char* what);

} // namespace ac

#endif
