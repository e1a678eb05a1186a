#include "ac/tournament.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ac {

Tournament Tournament::from_beats(int n, std::vector<Bitset> beats)
{
    if (n < 0 || beats.size() != static_cast<std::size_t>(n))
        throw GraphError("tournament: adjacency size mismatch");
    for (int u = 0; u < n; ++u) {
        if (beats[static_cast<std::size_t>(u)].capacity() != static_cast<std::size_t>(n))
            throw GraphError("tournament: bitset capacity mismatch");
        if (beats[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(u)))
            throw GraphError("tournament: vertex beats itself");
        for (int v = u + 1; v < n; ++v) {
            bool uv = beats[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
            bool vu = beats[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(u));
            if (uv == vu)
                throw GraphError("tournament: pair " + std::to_string(u) + "," + std::to_string(v)
                    + " must have exactly one arc");
        }
    }
    Tournament t;
    t.n_ = n;
    t.beats_ = std::move(beats);
    return t;
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs)
{
    std::vector<Bitset> beats(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw GraphError("tournament: bad arc");
        beats[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    }
    return from_beats(n, std::move(beats));
}

Tournament Tournament::induced(const Bitset& s, std::vector<int>* orig_ids) const
{
    std::vector<int> ids = s.to_vector();
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
        pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    std::vector<Bitset> beats(ids.size(), Bitset(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Bitset nb = beats_[static_cast<std::size_t>(ids[i])] & s;
        for (int v = nb.first(); v >= 0; v = nb.next(v))
            beats[i].set(static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]));
    }
    if (orig_ids)
        *orig_ids = std::move(ids);
    Tournament t;
    t.n_ = static_cast<int>(ids.size());
    t.beats_ = std::move(beats);
    return t;
}

bool is_acyclic(const Tournament& t, const VertexSet& s)
{
    std::size_t size = s.count();
    std::vector<bool> seen(size + 1, false);
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        std::size_t d = t.out_neighbors(v).count_and(s);
        if (seen[d])
            return false;
        seen[d] = true;
    }
    return true;
}

int greedy_acyclic_cover_bound(const Tournament& t)
{
    std::vector<Bitset> parts;
    for (int v = 0; v < t.vertex_count(); ++v) {
        bool placed = false;
        for (auto& part : parts) {
            part.set(static_cast<std::size_t>(v));
            if (is_acyclic(t, part)) {
                placed = true;
                break;
            }
            part.reset(static_cast<std::size_t>(v));
        }
        if (!placed) {
            parts.emplace_back(static_cast<std::size_t>(t.vertex_count()));
            parts.back().set(static_cast<std::size_t>(v));
        }
    }
    return static_cast<int>(parts.size());
}

namespace {

    struct ChromaticSearch {
        const Tournament& t;
        int best;
        std::vector<Bitset> parts;

        ChromaticSearch(const Tournament& t_, int ub) : t(t_), best(ub) {}

        void run(int v, int used)
        {
            if (used >= best)
                return;
            if (v == t.vertex_count()) {
                best = used;
                return;
            }
            for (int i = 0; i < used; ++i) {
                parts[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(v));
                if (is_acyclic(t, parts[static_cast<std::size_t>(i)]))
                    run(v + 1, used);
                parts[static_cast<std::size_t>(i)].reset(static_cast<std::size_t>(v));
            }
            if (used + 1 < best) {
                parts[static_cast<std::size_t>(used)].set(static_cast<std::size_t>(v));
                run(v + 1, used + 1);
                parts[static_cast<std::size_t>(used)].reset(static_cast<std::size_t>(v));
            }
        }
    };

} // namespace

int tournament_chromatic(const Tournament& t, const TournamentCaps& caps)
{
    if (t.vertex_count() > caps.chromatic_max_n)
        throw CapExceeded("tournament_chromatic: " + std::to_string(t.vertex_count()) + " vertices exceeds exact cap "
            + std::to_string(caps.chromatic_max_n) + " (greedy bound available)");
    if (t.vertex_count() == 0)
        return 0;
    int ub = greedy_acyclic_cover_bound(t);
    ChromaticSearch search(t, ub);
    search.parts.assign(static_cast<std::size_t>(ub), Bitset(static_cast<std::size_t>(t.vertex_count())));
    search.run(0, 0);
    return search.best;
}

int domination_number(const Tournament& t, const TournamentCaps& caps)
{
    int n = t.vertex_count();
    if (n > caps.domination_max_n)
        throw CapExceeded("domination_number: " + std::to_string(n) + " vertices exceeds exact cap "
            + std::to_string(caps.domination_max_n));
    if (n == 0)
        return 0;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u = t.out_neighbors(v).first(); u >= 0; u = t.out_neighbors(v).next(u))
            out[static_cast<std::size_t>(v)] |= 1ULL << u;
    std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t covered = 0;
            for (int i : idx)
                covered |= out[static_cast<std::size_t>(i)] | (1ULL << i);
            if (covered == full)
                return k;
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
    }
    return n;
}

bool is_complete_to(const Tournament& t, const VertexSet& a, const VertexSet& b)
{
    if (a.intersects(b))
        throw GraphError("is_complete_to: the sets overlap");
    for (int u = a.first(); u >= 0; u = a.next(u))
        if (!b.subset_of(t.out_neighbors(u)))
            return false;
    return true;
}

namespace {

    std::optional<TournamentPairCertificate> pair_from_candidate(const Tournament& t, const Bitset& a, long long c,
        const TournamentCaps& caps)
    {
        Bitset common = t.all_vertices();
        for (int v = a.first(); v >= 0; v = a.next(v))
            common &= t.out_neighbors(v);
        if (common.none())
            return std::nullopt;
        long long chi_b = tournament_chromatic(t.induced(common), caps);
        if (chi_b < c)
            return std::nullopt;
        TournamentPairCertificate cert;
        cert.a = a;
        cert.b = common;
        cert.chi_a = tournament_chromatic(t.induced(a), caps);
        cert.chi_b = chi_b;
        return cert;
    }

} // namespace

std::optional<TournamentPairCertificate> search_complete_pair(const Tournament& t, long long c,
    const TournamentCaps& caps)
{
    int n = t.vertex_count();
    if (n > caps.pair_search_max_n)
        throw CapExceeded("search_complete_pair: " + std::to_string(n) + " vertices exceeds cap "
            + std::to_string(caps.pair_search_max_n));
    for (std::uint64_t mask = 1; n < 64 && mask < (1ULL << n); ++mask) {
        Bitset a(static_cast<std::size_t>(n));
        for (std::uint64_t m = mask; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            a.set(static_cast<std::size_t>(v));
        }
        if (tournament_chromatic(t.induced(a), caps) < c)
            continue;
        auto cert = pair_from_candidate(t, a, c, caps);
        if (cert)
            return cert;
    }
    return std::nullopt;
}

std::optional<TournamentPairCertificate> search_cyclic_triangle_pair(const Tournament& t, long long c,
    const TournamentCaps& caps)
{
    int n = t.vertex_count();
    if (n > caps.pair_search_max_n)
        throw CapExceeded("search_cyclic_triangle_pair: " + std::to_string(n) + " vertices exceeds cap "
            + std::to_string(caps.pair_search_max_n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Bitset a(static_cast<std::size_t>(n));
                a.set(static_cast<std::size_t>(i));
                a.set(static_cast<std::size_t>(j));
                a.set(static_cast<std::size_t>(k));
                if (is_acyclic(t, a))
                    continue;
                auto cert = pair_from_candidate(t, a, c, caps);
                if (cert)
                    return cert;
            }
    return std::nullopt;
}

namespace {

    bool parse_ll(std::string_view tok, long long& out)
    {
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
        return ec == std::errc() && p == tok.data() + tok.size();
    }

} // namespace

Tournament parse_tournament(std::string_view text)
{
    int lineno = 0;
    long long n = -1;
    std::vector<Bitset> beats;
    int row = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        // tokenized by whitespace; `c` comment lines are ignored
        std::vector<std::string_view> toks;
        {
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
        }
        if (toks.empty()) {
            // inside the body a blank line is a vertex with no out-neighbours
            if (n >= 0 && row < n)
                ++row;
            continue;
        }
        if (toks[0] == "c")
            continue;
        if (toks[0] == "t") {
            if (n >= 0)
                throw ParseError(lineno, "duplicate header");
            if (toks.size() != 2 || !parse_ll(toks[1], n) || n < 0)
                throw ParseError(lineno, "malformed header, expected `t <n>`");
            beats.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
            continue;
        }
        if (n < 0)
            throw ParseError(lineno, "vertex line before header");
        if (row >= n)
            throw ParseError(lineno, "more vertex lines than vertices");
        for (auto tok : toks) {
            long long v;
            if (!parse_ll(tok, v))
                throw ParseError(lineno, "malformed out-neighbour list");
            if (v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
            if (v - 1 == row)
                throw ParseError(lineno, "vertex listed as its own out-neighbour");
            beats[static_cast<std::size_t>(row)].set(static_cast<std::size_t>(v - 1));
        }
        ++row;
    }
    if (n < 0)
        throw ParseError(lineno, "missing header");
    if (row != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(row));
    return Tournament::from_beats(static_cast<int>(n), std::move(beats));
}

std::string serialize_tournament(const Tournament& t)
{
    std::ostringstream out;
    out << "t " << t.vertex_count() << "\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        bool first = true;
        for (int u = t.out_neighbors(v).first(); u >= 0; u = t.out_neighbors(v).next(u)) {
            if (!first)
                out << " ";
            out << u + 1;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace ac
