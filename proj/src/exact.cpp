#include "ac/exact.hpp"

#include <algorithm>
#include <numeric>

namespace ac {

namespace {

    // adjacency as uint64 masks; usable whenever n <= 64
    struct MaskGraph {
        int n;
        std::vector<std::uint64_t> adj;

        explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(n), 0)
        {
            for (int u = 0; u < n; ++u)
                for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
                    adj[static_cast<std::size_t>(u)] |= 1ULL << v;
        }
    };

    int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

    struct CliqueSearch {
        const MaskGraph& g;
        int best = 0;

        explicit CliqueSearch(const MaskGraph& mg) : g(mg) {}

        // greedy coloring of the candidate set; vertices whose color exceeds
        // the remaining budget cannot extend the clique far enough
        void expand(std::uint64_t cand, int size)
        {
            if (size + popcount(cand) <= best)
                return;
            if (cand == 0) {
                best = std::max(best, size);
                return;
            }
            // color classes in increasing color order
            std::vector<int> order;
            std::vector<int> color;
            std::uint64_t rest = cand;
            int c = 0;
            while (rest) {
                ++c;
                std::uint64_t avail = rest;
                while (avail) {
                    int v = __builtin_ctzll(avail);
                    order.push_back(v);
                    color.push_back(c);
                    avail &= ~(g.adj[static_cast<std::size_t>(v)] | (1ULL << v));
                    rest &= ~(1ULL << v);
                }
            }
            for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                if (size + color[static_cast<std::size_t>(i)] <= best)
                    return;
                int v = order[static_cast<std::size_t>(i)];
                cand &= ~(1ULL << v);
                expand(cand & g.adj[static_cast<std::size_t>(v)], size + 1);
            }
        }
    };

} // namespace

int clique_number(const Graph& g, const SolverCaps& caps)
{
    if (g.vertex_count() > caps.clique_max_n)
        throw CapExceeded("clique_number: " + std::to_string(g.vertex_count()) + " vertices exceeds exact cap "
            + std::to_string(caps.clique_max_n));
    if (g.vertex_count() == 0)
        return 0;
    MaskGraph mg(g);
    CliqueSearch search(mg);
    std::uint64_t all = mg.n == 64 ? ~0ULL : ((1ULL << mg.n) - 1);
    search.expand(all, 0);
    return search.best;
}

std::vector<int> greedy_coloring(const Graph& g, std::span<const int> order)
{
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<bool> used;
    for (int v : order) {
        used.assign(used.size(), false);
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            int c = color[static_cast<std::size_t>(u)];
            if (c >= 0) {
                if (static_cast<std::size_t>(c) >= used.size())
                    used.resize(static_cast<std::size_t>(c) + 1, false);
                used[static_cast<std::size_t>(c)] = true;
            }
        }
        int c = 0;
        while (static_cast<std::size_t>(c) < used.size() && used[static_cast<std::size_t>(c)])
            ++c;
        if (static_cast<std::size_t>(c) >= used.size())
            used.resize(static_cast<std::size_t>(c) + 1, false);
        color[static_cast<std::size_t>(v)] = c;
    }
    return color;
}

int greedy_chromatic_bound(const Graph& g, std::span<const int> order)
{
    auto color = greedy_coloring(g, order);
    int k = 0;
    for (int c : color)
        k = std::max(k, c + 1);
    return k;
}

namespace {

    struct ChromaticSearch {
        const MaskGraph& g;
        int lower;
        int best;
        std::vector<int> best_color;
        std::vector<int> color;
        std::vector<std::uint64_t> class_mask; // vertices per color class

        ChromaticSearch(const MaskGraph& mg, int lb, int ub, std::vector<int> seed_color)
            : g(mg), lower(lb), best(ub), best_color(std::move(seed_color)),
              color(static_cast<std::size_t>(mg.n), -1), class_mask(static_cast<std::size_t>(mg.n), 0)
        {
        }

        bool done() const { return best <= lower; }

        void run(std::uint64_t uncolored, int used)
        {
            if (done())
                return;
            if (used >= best)
                return;
            if (!uncolored) {
                best = used;
                best_color = color;
                return;
            }
            // saturation-maximal vertex, ties by degree among uncolored then index
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (std::uint64_t rest = uncolored; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                int sat = 0;
                for (int c = 0; c < used; ++c)
                    if (g.adj[static_cast<std::size_t>(v)] & class_mask[static_cast<std::size_t>(c)])
                        ++sat;
                int deg = popcount(g.adj[static_cast<std::size_t>(v)] & uncolored);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            std::uint64_t vbit = 1ULL << pick;
            int limit = std::min(used + 1, best - 1);
            for (int c = 0; c < limit; ++c) {
                if (g.adj[static_cast<std::size_t>(pick)] & class_mask[static_cast<std::size_t>(c)])
                    continue;
                color[static_cast<std::size_t>(pick)] = c;
                class_mask[static_cast<std::size_t>(c)] |= vbit;
                run(uncolored & ~vbit, std::max(used, c + 1));
                class_mask[static_cast<std::size_t>(c)] &= ~vbit;
                color[static_cast<std::size_t>(pick)] = -1;
                if (done())
                    return;
            }
        }
    };

} // namespace

std::vector<int> exact_coloring(const Graph& g, const SolverCaps& caps)
{
    if (g.vertex_count() > caps.chromatic_max_n)
        throw CapExceeded("chromatic_number: " + std::to_string(g.vertex_count()) + " vertices exceeds exact cap "
            + std::to_string(caps.chromatic_max_n));
    if (g.vertex_count() == 0)
        return {};
    MaskGraph mg(g);

    // DSATUR greedy for the initial upper bound
    std::vector<int> order;
    {
        std::vector<int> color(static_cast<std::size_t>(mg.n), -1);
        std::vector<std::uint64_t> classes;
        std::uint64_t uncolored = mg.n == 64 ? ~0ULL : ((1ULL << mg.n) - 1);
        while (uncolored) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (std::uint64_t rest = uncolored; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                int sat = 0;
                for (std::size_t c = 0; c < classes.size(); ++c)
                    if (mg.adj[static_cast<std::size_t>(v)] & classes[c])
                        ++sat;
                int deg = popcount(mg.adj[static_cast<std::size_t>(v)] & uncolored);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            std::size_t c = 0;
            while (c < classes.size() && (mg.adj[static_cast<std::size_t>(pick)] & classes[c]))
                ++c;
            if (c == classes.size())
                classes.push_back(0);
            classes[c] |= 1ULL << pick;
            color[static_cast<std::size_t>(pick)] = static_cast<int>(c);
            uncolored &= ~(1ULL << pick);
            order.push_back(pick);
        }
        int lb = clique_number(g, caps);
        ChromaticSearch search(mg, lb, static_cast<int>(classes.size()), color);
        if (static_cast<int>(classes.size()) > lb)
            search.run(mg.n == 64 ? ~0ULL : ((1ULL << mg.n) - 1), 0);
        return search.best_color;
    }
}

int chromatic_number(const Graph& g, const SolverCaps& caps)
{
    auto color = exact_coloring(g, caps);
    int k = 0;
    for (int c : color)
        k = std::max(k, c + 1);
    return k;
}

bool valid_coloring(const Graph& g, const std::vector<int>& color)
{
    if (color.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    for (int c : color)
        if (c < 0)
            return false;
    for (auto [u, v] : g.edge_list())
        if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)])
            return false;
    return true;
}

namespace {

    struct BicliqueSearch {
        const MaskGraph& g;
        int best = 0;

        explicit BicliqueSearch(const MaskGraph& mg) : g(mg) {}

        // grow the left side A; cn = common out-neighborhood of A
        void expand(std::uint64_t a, std::uint64_t cn, int last, int asize)
        {
            best = std::max(best, std::min(asize, popcount(cn & ~a)));
            for (int v = last + 1; v < g.n; ++v) {
                std::uint64_t cn2 = cn & g.adj[static_cast<std::size_t>(v)];
                std::uint64_t a2 = a | (1ULL << v);
                int reachable = std::min(asize + 1 + (g.n - v - 1), popcount(cn2 & ~a2));
                if (reachable <= best)
                    continue;
                expand(a2, cn2, v, asize + 1);
            }
        }
    };

} // namespace

int biclique_number(const Graph& g, const SolverCaps& caps)
{
    if (g.vertex_count() > caps.biclique_max_n)
        throw CapExceeded("biclique_number: " + std::to_string(g.vertex_count()) + " vertices exceeds exact cap "
            + std::to_string(caps.biclique_max_n));
    if (g.edge_count() == 0)
        return 0;
    MaskGraph mg(g);
    BicliqueSearch search(mg);
    for (int v = 0; v < mg.n; ++v)
        search.expand(1ULL << v, mg.adj[static_cast<std::size_t>(v)], v, 1);
    return search.best;
}

} // namespace ac
