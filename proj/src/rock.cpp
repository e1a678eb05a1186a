#include "ac/rock.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace ac {

namespace {

    // Compact view of the search scope: candidate vertices ascending by
    // original index, adjacency restricted to the scope as uint64 masks.
    struct Scope {
        std::vector<int> ids;
        std::vector<std::uint64_t> adj;
        std::vector<int> deg;

        Scope(const Graph& g, const VertexSet& within)
        {
            ids = within.to_vector();
            std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
            for (std::size_t i = 0; i < ids.size(); ++i)
                pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
            adj.assign(ids.size(), 0);
            deg.assign(ids.size(), 0);
            for (std::size_t i = 0; i < ids.size(); ++i) {
                Bitset nb = g.neighbors(ids[i]) & within;
                for (int v = nb.first(); v >= 0; v = nb.next(v))
                    adj[i] |= 1ULL << pos[static_cast<std::size_t>(v)];
                deg[i] = __builtin_popcountll(adj[i]);
            }
        }

        int size() const { return static_cast<int>(ids.size()); }
    };

    struct SizeSearch {
        const Scope& sc;
        int target_size;
        long long threshold; // count only sets with at least this many edges
        bool exists_only;
        bool found = false;
        long long best_edges = -1;
        std::uint64_t best_mask = 0;
        std::vector<int> gains; // scratch

        SizeSearch(const Scope& s, int a, long long thr, bool exists)
            : sc(s), target_size(a), threshold(thr), exists_only(exists)
        {
            best_edges = threshold - 1;
        }

        // candidates considered in ascending index order so the first set
        // attaining the running-best edge count is the lexicographically
        // least one
        void run(std::uint64_t chosen, long long edges, int next, int size)
        {
            if (size == target_size) {
                if (edges > best_edges) {
                    best_edges = edges;
                    best_mask = chosen;
                    found = true;
                }
                return;
            }
            int need = target_size - size;
            int avail = sc.size() - next;
            if (avail < need)
                return;
            if (exists_only && edges >= threshold) {
                // supersets only gain edges; pad with the lowest candidates
                std::uint64_t mask = chosen;
                for (int j = next; need > 0; ++j, --need)
                    mask |= 1ULL << j;
                best_mask = mask;
                best_edges = edges;
                found = true;
                return;
            }
            // admissible bound: every added vertex contributes its edges into
            // the chosen set, plus at most all pairs among the additions
            gains.clear();
            for (int j = next; j < sc.size(); ++j)
                gains.push_back(__builtin_popcountll(sc.adj[static_cast<std::size_t>(j)] & chosen));
            if (static_cast<int>(gains.size()) > need)
                std::nth_element(gains.begin(), gains.begin() + need, gains.end(), std::greater<int>());
            long long bound = edges + static_cast<long long>(need) * (need - 1) / 2;
            for (int i = 0; i < need; ++i)
                bound += gains[static_cast<std::size_t>(i)];
            if (bound <= best_edges)
                return;
            for (int j = next; j <= sc.size() - need; ++j) {
                long long e2 = edges + __builtin_popcountll(sc.adj[static_cast<std::size_t>(j)] & chosen);
                run(chosen | (1ULL << j), e2, j + 1, size + 1);
                if (found && exists_only)
                    return;
            }
        }
    };

    // quick per-size skip: max edges any a-subset could induce
    long long size_upper_bound(const Scope& sc, int a)
    {
        std::vector<int> d = sc.deg;
        std::sort(d.begin(), d.end(), std::greater<int>());
        long long s = 0;
        for (int i = 0; i < a; ++i)
            s += d[static_cast<std::size_t>(i)];
        return std::min(s / 2, static_cast<long long>(a) * (a - 1) / 2);
    }

    VertexSet mask_to_set(const Graph& g, const Scope& sc, std::uint64_t mask)
    {
        Bitset out(static_cast<std::size_t>(g.vertex_count()));
        for (std::uint64_t m = mask; m;) {
            int i = __builtin_ctzll(m);
            m &= m - 1;
            out.set(static_cast<std::size_t>(sc.ids[static_cast<std::size_t>(i)]));
        }
        return out;
    }

    int max_external_degree_in(const Graph& g, const VertexSet& within, const VertexSet& a)
    {
        int best = 0;
        Bitset outside = within - a;
        for (int v = outside.first(); v >= 0; v = outside.next(v))
            best = std::max(best, g.degree_within(v, a));
        return best;
    }

} // namespace

std::optional<RockCertificate> find_rock_exact(const Graph& g, int p, const RockCaps& caps, const VertexSet* within)
{
    if (p < 1)
        throw GraphError("find_rock_exact: p must be positive");
    VertexSet scope_set = within ? *within : g.all_vertices();
    require_host(g, scope_set, "find_rock_exact");
    Scope sc(g, scope_set);
    if (sc.size() > caps.exact_max_n)
        throw CapExceeded("find_rock_exact: scope of " + std::to_string(sc.size()) + " vertices exceeds exact cap "
            + std::to_string(caps.exact_max_n) + " (use the heuristic finder)");
    // |E| >= p|A| forces a vertex of degree >= 2p, hence |A| >= 2p+1
    for (int a = 2 * p + 1; a <= sc.size(); ++a) {
        long long threshold = static_cast<long long>(p) * a;
        if (size_upper_bound(sc, a) < threshold)
            continue;
        SizeSearch search(sc, a, threshold, false);
        search.run(0, 0, 0, 0);
        if (search.found) {
            RockCertificate cert;
            cert.set = mask_to_set(g, sc, search.best_mask);
            cert.p = p;
            cert.internal_edges = search.best_edges;
            cert.mode = RockMode::Exact;
            cert.max_external_degree = max_external_degree_in(g, scope_set, cert.set);
            return cert;
        }
    }
    return std::nullopt;
}

namespace {

    // Dinic max-flow, int64 capacities.
    struct Dinic {
        struct Arc {
            int to;
            long long cap;
            std::size_t rev;
        };
        std::vector<std::vector<Arc>> arcs;
        std::vector<int> level, iter;

        explicit Dinic(int n) : arcs(static_cast<std::size_t>(n)) {}

        void add(int u, int v, long long cap_uv, long long cap_vu = 0)
        {
            arcs[static_cast<std::size_t>(u)].push_back({v, cap_uv, arcs[static_cast<std::size_t>(v)].size()});
            arcs[static_cast<std::size_t>(v)].push_back({u, cap_vu, arcs[static_cast<std::size_t>(u)].size() - 1});
        }

        bool bfs(int s, int t)
        {
            level.assign(arcs.size(), -1);
            std::queue<int> q;
            level[static_cast<std::size_t>(s)] = 0;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (const Arc& a : arcs[static_cast<std::size_t>(v)])
                    if (a.cap > 0 && level[static_cast<std::size_t>(a.to)] < 0) {
                        level[static_cast<std::size_t>(a.to)] = level[static_cast<std::size_t>(v)] + 1;
                        q.push(a.to);
                    }
            }
            return level[static_cast<std::size_t>(t)] >= 0;
        }

        long long dfs(int v, int t, long long f)
        {
            if (v == t)
                return f;
            for (int& i = iter[static_cast<std::size_t>(v)]; i < static_cast<int>(arcs[static_cast<std::size_t>(v)].size()); ++i) {
                Arc& a = arcs[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
                if (a.cap > 0 && level[static_cast<std::size_t>(a.to)] == level[static_cast<std::size_t>(v)] + 1) {
                    long long d = dfs(a.to, t, std::min(f, a.cap));
                    if (d > 0) {
                        a.cap -= d;
                        arcs[static_cast<std::size_t>(a.to)][a.rev].cap += d;
                        return d;
                    }
                }
            }
            return 0;
        }

        long long max_flow(int s, int t)
        {
            long long flow = 0;
            while (bfs(s, t)) {
                iter.assign(arcs.size(), 0);
                while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
                    flow += f;
            }
            return flow;
        }

        // complement of the set of nodes that reach t in the residual graph:
        // the maximal min-cut source side
        std::vector<bool> max_source_side(int t)
        {
            std::vector<bool> reaches_t(arcs.size(), false);
            std::queue<int> q;
            reaches_t[static_cast<std::size_t>(t)] = true;
            q.push(t);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (const Arc& a : arcs[static_cast<std::size_t>(v)]) {
                    // incoming residual arc u->v exists iff reverse arc has cap
                    const Arc& rev = arcs[static_cast<std::size_t>(a.to)][a.rev];
                    if (rev.cap > 0 && !reaches_t[static_cast<std::size_t>(a.to)]) {
                        reaches_t[static_cast<std::size_t>(a.to)] = true;
                        q.push(a.to);
                    }
                }
            }
            std::vector<bool> side(arcs.size());
            for (std::size_t i = 0; i < arcs.size(); ++i)
                side[i] = !reaches_t[i];
            return side;
        }
    };

    // Decide whether some nonempty S within the scope has |E(S)| >= p|S|,
    // and if so return one (the maximal min-cut side). Uses the max-flow
    // formulation of the dense-subgraph decision at threshold p - 1/(2k),
    // scaled to integer capacities; pure peeling cannot decide this exactly
    // for p >= 2.
    std::optional<VertexSet> dense_subset_flow(const Graph& g, int p, const VertexSet& scope)
    {
        std::vector<int> ids = scope.to_vector();
        int k = static_cast<int>(ids.size());
        if (k == 0)
            return std::nullopt;
        std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t i = 0; i < ids.size(); ++i)
            pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);

        long long scale = 2LL * k;
        int s = k, t = k + 1;
        Dinic net(k + 2);
        long long total_source = 0;
        for (int i = 0; i < k; ++i) {
            Bitset nb = g.neighbors(ids[static_cast<std::size_t>(i)]) & scope;
            long long deg = static_cast<long long>(nb.count());
            net.add(s, i, scale * deg);
            total_source += scale * deg;
            // capacity 2*lambda*scale with lambda = p - 1/(2k)
            net.add(i, t, 2 * scale * p - 2);
            for (int v = nb.next(ids[static_cast<std::size_t>(i)]); v >= 0; v = nb.next(v))
                net.add(i, pos[static_cast<std::size_t>(v)], scale, scale);
        }
        long long flow = net.max_flow(s, t);
        if (flow >= total_source)
            return std::nullopt; // min cut keeps every vertex on the sink side
        auto side = net.max_source_side(t);
        Bitset out(static_cast<std::size_t>(g.vertex_count()));
        for (int i = 0; i < k; ++i)
            if (side[static_cast<std::size_t>(i)])
                out.set(static_cast<std::size_t>(ids[static_cast<std::size_t>(i)]));
        return out;
    }

} // namespace

bool dense_subset_exists(const Graph& g, int p, const VertexSet* within)
{
    VertexSet scope = within ? *within : g.all_vertices();
    require_host(g, scope, "dense_subset_exists");
    return dense_subset_flow(g, p, scope).has_value();
}

std::optional<RockCertificate> find_rock_heuristic(const Graph& g, int p, const VertexSet* within)
{
    if (p < 1)
        throw GraphError("find_rock_heuristic: p must be positive");
    VertexSet scope = within ? *within : g.all_vertices();
    require_host(g, scope, "find_rock_heuristic");
    auto start = dense_subset_flow(g, p, scope);
    if (!start)
        return std::nullopt;

    // greedy deletion toward an inclusion-minimal dense set: repeatedly drop
    // the lowest-degree vertex whose removal keeps |E| >= p|A|
    Bitset a = *start;
    long long edges = g.edges_within(a);
    long long size = static_cast<long long>(a.count());
    while (true) {
        int pick = -1, pick_deg = 0;
        for (int v = a.first(); v >= 0; v = a.next(v)) {
            int d = g.degree_within(v, a);
            if (edges - d >= static_cast<long long>(p) * (size - 1) && (pick < 0 || d < pick_deg)) {
                pick = v;
                pick_deg = d;
            }
        }
        if (pick < 0 || size == 1)
            break;
        a.reset(static_cast<std::size_t>(pick));
        edges -= pick_deg;
        --size;
    }

    RockCertificate cert;
    cert.set = a;
    cert.p = p;
    cert.internal_edges = edges;
    cert.mode = RockMode::HeuristicMinimal;
    cert.max_external_degree = max_external_degree_in(g, scope, a);
    return cert;
}

RockAudit verify_rock(const Graph& g, const RockCertificate& cert, const RockCaps& caps, const VertexSet* within)
{
    RockAudit audit;
    VertexSet scope = within ? *within : g.all_vertices();
    require_host(g, scope, "verify_rock");
    require_host(g, cert.set, "verify_rock");

    auto fail = [&](const std::string& why) {
        audit.pass = false;
        audit.failure = why;
        return audit;
    };

    if (!cert.set.subset_of(scope))
        return fail("certificate set leaves the graph scope");
    long long size = static_cast<long long>(cert.set.count());
    if (size == 0)
        return fail("certificate set is empty");

    audit.recomputed_edges = g.edges_within(cert.set);
    if (audit.recomputed_edges != cert.internal_edges)
        return fail("stated internal edge count " + std::to_string(cert.internal_edges) + " differs from recomputed "
            + std::to_string(audit.recomputed_edges));
    if (audit.recomputed_edges < static_cast<long long>(cert.p) * size)
        return fail("edge count below p|A| threshold");

    audit.recomputed_external = max_external_degree_in(g, scope, cert.set);
    if (audit.recomputed_external != cert.max_external_degree)
        return fail("stated max external degree differs from recomputed");

    if (cert.mode == RockMode::Exact) {
        Scope sc(g, scope);
        if (sc.size() > caps.exact_max_n)
            throw CapExceeded("verify_rock: scope exceeds exact cap");
        for (int a = 2 * cert.p + 1; a < static_cast<int>(size); ++a) {
            long long threshold = static_cast<long long>(cert.p) * a;
            if (size_upper_bound(sc, a) < threshold)
                continue;
            SizeSearch search(sc, a, threshold, true);
            search.run(0, 0, 0, 0);
            if (search.found) {
                audit.witness_subset = mask_to_set(g, sc, search.best_mask).to_vector();
                return fail("a smaller qualifying set of size " + std::to_string(a) + " exists");
            }
        }
        {
            SizeSearch search(sc, static_cast<int>(size), static_cast<long long>(cert.p) * size, false);
            search.run(0, 0, 0, 0);
            if (search.found && search.best_edges > cert.internal_edges) {
                audit.witness_subset = mask_to_set(g, sc, search.best_mask).to_vector();
                return fail("a same-size set with more edges exists");
            }
        }
        if (audit.recomputed_external > 2 * cert.p + 1) {
            Bitset outside = scope - cert.set;
            for (int v = outside.first(); v >= 0; v = outside.next(v))
                if (g.degree_within(v, cert.set) == audit.recomputed_external) {
                    audit.witness_vertex = v;
                    break;
                }
            return fail("external vertex sees more than 2p+1 of the rock");
        }
    }
    return audit;
}

PeelResult peel_rocks(const Graph& g, int p, int s, const RockCaps& caps)
{
    if (s < 1)
        throw GraphError("peel_rocks: size cap must be positive");
    PeelResult result;
    result.sequence.size_cap = s;
    result.residual = g.all_vertices();
    while (true) {
        auto rock = find_rock_exact(g, p, caps, &result.residual);
        if (!rock)
            break;
        if (static_cast<int>(rock->set.count()) > s) {
            result.sequence.residual_rock_size = static_cast<int>(rock->set.count());
            break;
        }
        result.residual -= rock->set;
        result.sequence.rocks.push_back(std::move(*rock));
    }
    return result;
}

} // namespace ac
