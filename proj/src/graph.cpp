#include "ac/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace ac {

void require_host(const Graph& g, const VertexSet& s, const char* what)
{
    if (s.capacity() != static_cast<std::size_t>(g.vertex_count()))
        throw GraphError(std::string(what) + ": vertex set capacity " + std::to_string(s.capacity())
            + " does not match graph order " + std::to_string(g.vertex_count()));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        g.adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        ++g.m_;
    }
    return g;
}

long long Graph::edges_within(const VertexSet& s) const
{
    require_host(*this, s, "edges_within");
    long long twice = 0;
    for (int v = s.first(); v >= 0; v = s.next(v))
        twice += static_cast<long long>(adj_[static_cast<std::size_t>(v)].count_and(s));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0; v = adj_[static_cast<std::size_t>(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edge_list_within(const VertexSet& s) const
{
    require_host(*this, s, "edge_list_within");
    std::vector<std::pair<int, int>> out;
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        Bitset nb = adj_[static_cast<std::size_t>(u)] & s;
        for (int v = nb.next(u); v >= 0; v = nb.next(v))
            out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::induced(const VertexSet& s, std::vector<int>* orig_ids) const
{
    require_host(*this, s, "induced");
    std::vector<int> ids = s.to_vector();
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
        pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Bitset nb = adj_[static_cast<std::size_t>(ids[i])] & s;
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
            int j = pos[static_cast<std::size_t>(v)];
            if (static_cast<int>(i) < j) {
                h.adj_[i].set(static_cast<std::size_t>(j));
                h.adj_[static_cast<std::size_t>(j)].set(i);
                ++h.m_;
            }
        }
    }
    if (orig_ids)
        *orig_ids = std::move(ids);
    return h;
}

Rational denseness(const Graph& g, const VertexSet& a)
{
    require_host(g, a, "denseness");
    long long sz = static_cast<long long>(a.count());
    if (sz == 0)
        return Rational(0);
    return Rational(g.edges_within(a), sz);
}

VertexSet min_degree_core(const Graph& g, int d, std::vector<PeelStep>* trace)
{
    Bitset alive = g.all_vertices();
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    std::deque<int> queue;
    std::vector<bool> queued(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] < d) {
            queue.push_back(v);
            queued[static_cast<std::size_t>(v)] = true;
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive.test(static_cast<std::size_t>(v)))
            continue;
        if (trace)
            trace->push_back({v, deg[static_cast<std::size_t>(v)]});
        alive.reset(static_cast<std::size_t>(v));
        Bitset nb = g.neighbors(v) & alive;
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            if (--deg[static_cast<std::size_t>(u)] < d && !queued[static_cast<std::size_t>(u)]) {
                queue.push_back(u);
                queued[static_cast<std::size_t>(u)] = true;
            }
        }
    }
    return alive;
}

bool are_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    require_host(g, a, "are_anticomplete");
    require_host(g, b, "are_anticomplete");
    if (a.intersects(b))
        return false;
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (g.neighbors(v).intersects(b))
            return false;
    return true;
}

namespace {

    bool parse_int(std::string_view tok, long long& out)
    {
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
        return ec == std::errc() && p == tok.data() + tok.size();
    }

    std::vector<std::string_view> split_ws(std::string_view line)
    {
        std::vector<std::string_view> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                toks.push_back(line.substr(i, j - i));
            i = j;
        }
        return toks;
    }

} // namespace

Graph parse_graph(std::string_view text)
{
    int lineno = 0;
    long long n = -1, m = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> keys;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c")
            continue;
        if (toks[0] == "p") {
            if (n >= 0)
                throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(lineno, "malformed problem line, expected `p edge <n> <m>`");
            long long mm;
            if (!parse_int(toks[2], n) || !parse_int(toks[3], mm) || n < 0 || mm < 0)
                throw ParseError(lineno, "malformed problem line counts");
            m = mm;
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0)
                throw ParseError(lineno, "edge before problem line");
            long long u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(lineno, "malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(lineno, "self-loop");
            int a = static_cast<int>(std::min(u, v) - 1), b = static_cast<int>(std::max(u, v) - 1);
            if (!keys.insert(a * n + b).second)
                throw ParseError(lineno, "duplicate edge");
            edges.emplace_back(a, b);
            ++seen;
            continue;
        }
        throw ParseError(lineno, "unrecognized line");
    }
    if (n < 0)
        throw ParseError(lineno, "missing problem line");
    if (seen != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) + ", found " + std::to_string(seen));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edge_list())
        out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

} // namespace ac
