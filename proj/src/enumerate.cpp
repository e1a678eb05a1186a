#include "ac/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace ac {

std::uint64_t pack_edge_bit(int n, int u, int v)
{
    if (u > v)
        std::swap(u, v);
    long long idx = static_cast<long long>(u) * n - static_cast<long long>(u) * (u + 1) / 2 + (v - u - 1);
    return 1ULL << idx;
}

PackedGraph pack_graph(const Graph& g)
{
    if (g.vertex_count() > 11)
        throw GraphError("pack_graph: at most 11 vertices");
    PackedGraph pg;
    pg.n = g.vertex_count();
    for (auto [u, v] : g.edge_list())
        pg.mask |= pack_edge_bit(pg.n, u, v);
    return pg;
}

Graph unpack_graph(const PackedGraph& pg)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < pg.n; ++u)
        for (int v = u + 1; v < pg.n; ++v)
            if (pg.mask & pack_edge_bit(pg.n, u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(pg.n, edges);
}

namespace {

    struct AdjMatrix {
        int n;
        bool directed;
        std::vector<char> m; // n x n

        AdjMatrix(int n_, bool dir) : n(n_), directed(dir), m(static_cast<std::size_t>(n_) * n_, 0) {}

        char& at(int i, int j) { return m[static_cast<std::size_t>(i) * n + j]; }
        char at(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
    };

    AdjMatrix matrix_of(const PackedGraph& pg)
    {
        AdjMatrix a(pg.n, false);
        for (int u = 0; u < pg.n; ++u)
            for (int v = u + 1; v < pg.n; ++v)
                if (pg.mask & pack_edge_bit(pg.n, u, v)) {
                    a.at(u, v) = 1;
                    a.at(v, u) = 1;
                }
        return a;
    }

    AdjMatrix matrix_of(const PackedTournament& pt)
    {
        AdjMatrix a(pt.n, true);
        for (int u = 0; u < pt.n; ++u)
            for (int v = u + 1; v < pt.n; ++v) {
                if (pt.mask & pack_edge_bit(pt.n, u, v))
                    a.at(u, v) = 1;
                else
                    a.at(v, u) = 1;
            }
        return a;
    }

    // iterated refinement: vertices keyed by (color, sorted out-neighbour
    // colors, sorted in-neighbour colors); colors reassigned by signature
    // rank until the partition stabilizes
    std::vector<std::vector<int>> refine_cells(const AdjMatrix& a)
    {
        int n = a.n;
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        int classes = 1;
        while (true) {
            using Sig = std::pair<int, std::pair<std::vector<int>, std::vector<int>>>;
            std::vector<Sig> sig(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<int> outc, inc;
                for (int u = 0; u < n; ++u) {
                    if (u == v)
                        continue;
                    if (a.at(v, u))
                        outc.push_back(color[static_cast<std::size_t>(u)]);
                    if (a.directed && a.at(u, v))
                        inc.push_back(color[static_cast<std::size_t>(u)]);
                }
                std::sort(outc.begin(), outc.end());
                std::sort(inc.begin(), inc.end());
                sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], {outc, inc}};
            }
            std::map<Sig, int> rank;
            for (const auto& s : sig)
                rank.emplace(s, 0);
            int next = 0;
            for (auto& [key, value] : rank)
                value = next++;
            for (int v = 0; v < n; ++v)
                color[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
            if (next == classes)
                break;
            classes = next;
        }
        std::vector<std::vector<int>> cells(static_cast<std::size_t>(classes));
        for (int v = 0; v < n; ++v)
            cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
        return cells;
    }

    struct Minimizer {
        const AdjMatrix& a;
        std::vector<std::vector<int>> cells;
        std::vector<int> order;
        std::uint64_t best = ~0ULL;

        explicit Minimizer(const AdjMatrix& a_) : a(a_), cells(refine_cells(a_)) {}

        std::uint64_t apply() const
        {
            std::uint64_t mask = 0;
            int n = a.n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int u = order[static_cast<std::size_t>(i)], v = order[static_cast<std::size_t>(j)];
                    if (a.directed) {
                        if (a.at(u, v))
                            mask |= pack_edge_bit(n, i, j);
                    } else if (a.at(u, v)) {
                        mask |= pack_edge_bit(n, i, j);
                    }
                }
            return mask;
        }

        void rec(std::size_t ci)
        {
            if (ci == cells.size()) {
                best = std::min(best, apply());
                return;
            }
            std::vector<int>& cell = cells[ci];
            std::sort(cell.begin(), cell.end());
            do {
                order.insert(order.end(), cell.begin(), cell.end());
                rec(ci + 1);
                order.resize(order.size() - cell.size());
            } while (std::next_permutation(cell.begin(), cell.end()));
        }

        std::uint64_t minimize()
        {
            rec(0);
            return best;
        }
    };

} // namespace

PackedGraph canonical_form(const PackedGraph& pg)
{
    if (pg.n <= 1)
        return pg;
    AdjMatrix a = matrix_of(pg);
    Minimizer mz(a);
    return {pg.n, mz.minimize()};
}

PackedTournament canonical_form(const PackedTournament& pt)
{
    if (pt.n <= 1)
        return pt;
    AdjMatrix a = matrix_of(pt);
    Minimizer mz(a);
    return {pt.n, mz.minimize()};
}

std::vector<PackedGraph> enumerate_graphs(int n)
{
    if (n < 1 || n > 8)
        throw GraphError("enumerate_graphs: supported for 1..8 vertices");
    std::vector<PackedGraph> level = {{1, 0}};
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<PackedGraph> next;
        for (const PackedGraph& base : level) {
            for (std::uint64_t nb = 0; nb < (1ULL << (size - 1)); ++nb) {
                PackedGraph cand;
                cand.n = size;
                // old pairs keep relative order when the new vertex is last
                for (int u = 0; u < size - 1; ++u)
                    for (int v = u + 1; v < size - 1; ++v)
                        if (base.mask & pack_edge_bit(size - 1, u, v))
                            cand.mask |= pack_edge_bit(size, u, v);
                for (int u = 0; u < size - 1; ++u)
                    if (nb & (1ULL << u))
                        cand.mask |= pack_edge_bit(size, u, size - 1);
                PackedGraph canon = canonical_form(cand);
                if (seen.insert(canon.mask).second)
                    next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end(),
            [](const PackedGraph& x, const PackedGraph& y) { return x.mask < y.mask; });
        level = std::move(next);
    }
    return level;
}

PackedTournament pack_tournament(const Tournament& t)
{
    if (t.vertex_count() > 11)
        throw GraphError("pack_tournament: at most 11 vertices");
    PackedTournament pt;
    pt.n = t.vertex_count();
    for (int u = 0; u < pt.n; ++u)
        for (int v = u + 1; v < pt.n; ++v)
            if (t.beats(u, v))
                pt.mask |= pack_edge_bit(pt.n, u, v);
    return pt;
}

Tournament unpack_tournament(const PackedTournament& pt)
{
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < pt.n; ++u)
        for (int v = u + 1; v < pt.n; ++v) {
            if (pt.mask & pack_edge_bit(pt.n, u, v))
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    return Tournament::from_arcs(pt.n, arcs);
}

std::vector<PackedTournament> enumerate_tournaments(int n)
{
    if (n < 1 || n > 7)
        throw GraphError("enumerate_tournaments: supported for 1..7 vertices");
    std::vector<PackedTournament> level = {{1, 0}};
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<PackedTournament> next;
        for (const PackedTournament& base : level) {
            for (std::uint64_t dir = 0; dir < (1ULL << (size - 1)); ++dir) {
                PackedTournament cand;
                cand.n = size;
                for (int u = 0; u < size - 1; ++u)
                    for (int v = u + 1; v < size - 1; ++v)
                        if (base.mask & pack_edge_bit(size - 1, u, v))
                            cand.mask |= pack_edge_bit(size, u, v);
                // bit set: old vertex u beats the new last vertex
                for (int u = 0; u < size - 1; ++u)
                    if (dir & (1ULL << u))
                        cand.mask |= pack_edge_bit(size, u, size - 1);
                PackedTournament canon = canonical_form(cand);
                if (seen.insert(canon.mask).second)
                    next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end(),
            [](const PackedTournament& x, const PackedTournament& y) { return x.mask < y.mask; });
        level = std::move(next);
    }
    return level;
}

} // namespace ac
