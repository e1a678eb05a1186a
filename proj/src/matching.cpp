#include "ac/matching.hpp"

#include <algorithm>
#include <set>

namespace ac {

namespace {

    // greedy maximal matching scanning edges in lexicographic order
    EdgeList greedy_maximal_matching(const EdgeList& edges, std::size_t nverts)
    {
        EdgeList m;
        std::vector<bool> used(nverts, false);
        for (auto [u, v] : edges) {
            if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
                used[static_cast<std::size_t>(u)] = true;
                used[static_cast<std::size_t>(v)] = true;
                m.emplace_back(u, v);
            }
        }
        return m;
    }

} // namespace

MatchingDecomposition decompose(const Graph& g, int q, const VertexSet* scope)
{
    if (q < 1)
        throw GraphError("decompose: q must be positive");
    MatchingDecomposition d;
    d.q = q;
    d.scope = scope ? *scope : g.all_vertices();
    require_host(g, d.scope, "decompose");
    d.cover = Bitset(static_cast<std::size_t>(g.vertex_count()));

    EdgeList remaining = g.edge_list_within(d.scope);
    std::size_t nv = static_cast<std::size_t>(g.vertex_count());
    while (true) {
        EdgeList m = greedy_maximal_matching(remaining, nv);
        if (static_cast<int>(m.size()) < q) {
            for (auto [u, v] : m) {
                d.cover.set(static_cast<std::size_t>(u));
                d.cover.set(static_cast<std::size_t>(v));
            }
            d.residue = std::move(remaining);
            return d;
        }
        m.resize(static_cast<std::size_t>(q));
        std::set<std::pair<int, int>> taken(m.begin(), m.end());
        EdgeList rest;
        rest.reserve(remaining.size() - m.size());
        for (auto e : remaining)
            if (!taken.count(e))
                rest.push_back(e);
        remaining = std::move(rest);
        d.matchings.push_back(std::move(m));
    }
}

DecompositionAudit verify_decomposition(const Graph& g, const MatchingDecomposition& d)
{
    DecompositionAudit audit;
    auto fail = [&](const std::string& why) {
        audit.pass = false;
        audit.failure = why;
        return audit;
    };

    require_host(g, d.scope, "verify_decomposition");
    require_host(g, d.cover, "verify_decomposition");
    if (d.q < 1)
        return fail("q must be positive");

    // matchings: pairwise vertex-disjoint edges, cardinality exactly q
    for (std::size_t j = 0; j < d.matchings.size(); ++j) {
        if (static_cast<int>(d.matchings[j].size()) != d.q) {
            audit.witness_matching = static_cast<int>(j);
            return fail("matching has cardinality " + std::to_string(d.matchings[j].size()) + ", expected "
                + std::to_string(d.q));
        }
        std::set<int> ends;
        for (auto [u, v] : d.matchings[j])
            if (!ends.insert(u).second || !ends.insert(v).second) {
                audit.witness_matching = static_cast<int>(j);
                audit.witness_edge = {u, v};
                return fail("edges in a matching share a vertex");
            }
    }

    // partition check against E(G[scope])
    EdgeList expected = g.edge_list_within(d.scope);
    std::set<std::pair<int, int>> want(expected.begin(), expected.end());
    std::set<std::pair<int, int>> got;
    auto note_edge = [&](std::pair<int, int> e) -> bool {
        if (e.first > e.second)
            std::swap(e.first, e.second);
        if (!want.count(e) || !got.insert(e).second) {
            audit.witness_edge = e;
            return false;
        }
        return true;
    };
    for (auto e : d.residue)
        if (!note_edge(e))
            return fail("residue edge missing from the scope or repeated");
    for (std::size_t j = 0; j < d.matchings.size(); ++j)
        for (auto e : d.matchings[j])
            if (!note_edge(e)) {
                audit.witness_matching = static_cast<int>(j);
                return fail("matching edge missing from the scope or repeated");
            }
    if (got.size() != want.size())
        return fail("decomposition misses " + std::to_string(want.size() - got.size()) + " edges of the scope");

    // cover: small enough, and every residue edge meets it
    if (static_cast<long long>(d.cover.count()) > 2LL * d.q - 2)
        return fail("cover has more than 2q-2 vertices");
    if (!d.cover.subset_of(d.scope))
        return fail("cover leaves the scope");
    for (auto [u, v] : d.residue)
        if (!d.cover.test(static_cast<std::size_t>(u)) && !d.cover.test(static_cast<std::size_t>(v))) {
            audit.witness_edge = {u, v};
            return fail("residue edge avoids the cover");
        }
    return audit;
}

} // namespace ac
