#include "ac/generators.hpp"

#include "ac/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace ac {

Graph gen_complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_complete_bipartite(int a, int b)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

Graph gen_gnp(int n, double edge_prob, std::uint64_t seed)
{
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw GraphError("gnp: edge probability outside [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < edge_prob)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_mycielski(int iterations)
{
    if (iterations < 0)
        throw GraphError("mycielski: iterations must be >= 0");
    Graph g = gen_complete(2);
    for (int it = 0; it < iterations; ++it) {
        int n = g.vertex_count();
        std::vector<std::pair<int, int>> edges = g.edge_list();
        // shadow vertex n+v copies v's neighbourhood; apex 2n sees shadows
        for (auto [u, v] : g.edge_list()) {
            edges.emplace_back(n + u, v);
            edges.emplace_back(u, n + v);
        }
        for (int v = 0; v < n; ++v)
            edges.emplace_back(n + v, 2 * n);
        g = Graph::from_edges(2 * n + 1, edges);
    }
    return g;
}

Graph gen_kneser(int n, int k)
{
    if (n < 1 || k < 1 || 2 * k > n)
        throw GraphError("kneser: need 1 <= k <= n/2");
    std::vector<std::uint64_t> subsets;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx)
            m |= 1ULL << i;
        subsets.push_back(m);
        int i = k - 1;
        for (; i >= 0; --i)
            if (idx[static_cast<std::size_t>(i)] < n - (k - i))
                break;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if (!(subsets[a] & subsets[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph::from_edges(static_cast<int>(subsets.size()), edges);
}

Graph gen_shift(int n)
{
    if (n < 2)
        throw GraphError("shift: need n >= 2");
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                edges.emplace_back(id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    id[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    return Graph::from_edges(static_cast<int>(pairs.size()), edges);
}

Tournament gen_random_tournament(int n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin())
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    return Tournament::from_arcs(n, arcs);
}

Tournament gen_transitive_tournament(int n)
{
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            arcs.emplace_back(u, v);
    return Tournament::from_arcs(n, arcs);
}

namespace {

    int want_int(const std::map<std::string, std::string>& params, const std::string& key)
    {
        auto it = params.find(key);
        if (it == params.end())
            throw GraphError("generator parameter `" + key + "` is required");
        return std::stoi(it->second);
    }

    int int_or(const std::map<std::string, std::string>& params, const std::string& key, int dflt)
    {
        auto it = params.find(key);
        return it == params.end() ? dflt : std::stoi(it->second);
    }

    double want_double(const std::map<std::string, std::string>& params, const std::string& key)
    {
        auto it = params.find(key);
        if (it == params.end())
            throw GraphError("generator parameter `" + key + "` is required");
        return std::stod(it->second);
    }

} // namespace

GeneratorOutput generate(const std::string& family, const std::map<std::string, std::string>& params,
    std::uint64_t seed)
{
    GeneratorOutput out;
    if (family == "complete") {
        int n = want_int(params, "n");
        out.object = gen_complete(n);
        out.description = "complete n=" + std::to_string(n);
    } else if (family == "complete-bipartite") {
        int a = want_int(params, "a"), b = want_int(params, "b");
        out.object = gen_complete_bipartite(a, b);
        out.description = "complete-bipartite a=" + std::to_string(a) + " b=" + std::to_string(b);
    } else if (family == "gnp") {
        int n = want_int(params, "n");
        double prob = want_double(params, "edge-prob");
        out.object = gen_gnp(n, prob, seed);
        out.description = "gnp n=" + std::to_string(n) + " edge-prob=" + std::to_string(prob) + " seed="
            + std::to_string(seed);
    } else if (family == "mycielski") {
        int it = int_or(params, "iterations", 2);
        out.object = gen_mycielski(it);
        out.description = "mycielski iterations=" + std::to_string(it);
    } else if (family == "kneser") {
        int n = want_int(params, "n"), k = want_int(params, "k");
        out.object = gen_kneser(n, k);
        out.description = "kneser n=" + std::to_string(n) + " k=" + std::to_string(k);
    } else if (family == "shift") {
        int n = want_int(params, "n");
        out.object = gen_shift(n);
        out.description = "shift n=" + std::to_string(n);
    } else if (family == "random-tournament") {
        int n = want_int(params, "n");
        out.object = gen_random_tournament(n, seed);
        out.description = "random-tournament n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    } else {
        throw GraphError("unknown generator family `" + family + "`");
    }
    return out;
}

} // namespace ac
