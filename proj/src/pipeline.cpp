#include "ac/pipeline.hpp"

#include <algorithm>
#include <climits>

namespace ac {

namespace {

    VertexSet union_with_parts(const VertexSet& base, const PartitionFamily& fam, const std::vector<int>& idx)
    {
        Bitset out = base;
        for (int i : idx)
            out |= fam.parts[static_cast<std::size_t>(i)];
        return out;
    }

    // vertices of `scope` outside `avoid_ctx` with no neighbour in `touch`
    VertexSet untouched_vertices(const Graph& g, const VertexSet& scope, const VertexSet& avoid_ctx,
        const VertexSet& touch)
    {
        Bitset out(static_cast<std::size_t>(g.vertex_count()));
        Bitset candidates = scope - avoid_ctx;
        for (int v = candidates.first(); v >= 0; v = candidates.next(v))
            if (!g.neighbors(v).intersects(touch))
                out.set(static_cast<std::size_t>(v));
        return out;
    }

    std::vector<std::vector<int>> all_index_sets(int k, int half)
    {
        std::vector<std::vector<int>> out;
        std::vector<int> idx(static_cast<std::size_t>(half));
        for (int i = 0; i < half; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            out.push_back(idx);
            int h = half;
            int i = h - 1;
            for (; i >= 0; --i)
                if (idx[static_cast<std::size_t>(i)] < k - (h - i))
                    break;
            if (i < 0)
                break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < h; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return out;
    }

    std::vector<std::vector<int>> scanned_index_sets(const PartitionTrial& trial, int k, int half, bool exhaustive)
    {
        if (exhaustive)
            return all_index_sets(k, half);
        std::vector<std::vector<int>> out;
        for (const auto& rec : trial.checked)
            out.push_back(rec.parts);
        return out;
    }

} // namespace

PairSearchOutcome find_pair_chi(const Graph& g, int p, int q, long long c, std::uint64_t seed,
    const PipelineCaps& caps)
{
    PairSearchOutcome out;
    std::optional<RockCertificate> rock;
    try {
        rock = find_rock_exact(g, p, caps.rock);
    } catch (const CapExceeded& e) {
        out.error_code = "oracle-cap";
        out.error_detail = e.what();
        return out;
    }
    if (!rock) {
        out.error_code = "no-rock";
        out.error_detail = "no nonempty set reaches denseness " + std::to_string(p);
        return out;
    }
    const VertexSet& a = rock->set;
    long long a_size = static_cast<long long>(a.count());
    MatchingDecomposition decomp = decompose(g, q, &a);
    const VertexSet& x = decomp.cover;

    int k = 4 * p + 2, half = 2 * p + 1;
    long long family_size = binomial(k, half);
    bool exhaustive = family_size <= caps.family_cap;
    long long threshold = p * a_size / 32;

    PartitionCheckMode mode;
    mode.exhaustive = exhaustive;
    mode.sample_count = caps.sample_count;
    GoodPartitionSearch search
        = find_good_partition(g, a, x, PartitionVariant::Chi, p, threshold, seed, caps.max_tries, mode, caps.family_cap);
    if (search.status != GoodPartitionSearch::Status::Found) {
        out.error_code = "partition-search-exhausted";
        out.error_detail = "no trial met the per-index-set edge threshold " + std::to_string(threshold) + " within "
            + std::to_string(caps.max_tries) + " tries";
        out.partition_diagnostics = search.trial;
        return out;
    }
    const PartitionFamily& fam = *search.family;

    BoundTrace trace;
    trace.mode = PairMode::Chi;
    trace.p = p;
    trace.q = q;
    trace.c = c;
    trace.seed = seed;
    trace.rock = a;
    trace.cover = x;
    trace.decomposition = decomp;
    trace.ground_vertices = search.trial->ground_vertices;
    trace.partition_assignment = search.trial->assignment;

    const Rational a_required(p, 32);
    auto index_sets = scanned_index_sets(*search.trial, k, half, exhaustive);
    for (const auto& idx : index_sets) {
        IndexScanRecord rec;
        rec.index_set = idx;
        VertexSet a_side = union_with_parts(x, fam, idx);
        rec.a_side_size = static_cast<long long>(a_side.count());
        rec.a_side_edges = rec.a_side_size ? g.edges_within(a_side) : 0;
        Rational dens = rec.a_side_size ? Rational(rec.a_side_edges, rec.a_side_size) : Rational(0);
        rec.a_side_passed = rec.a_side_size > 0 && dens >= a_required;
        if (rec.a_side_passed) {
            VertexSet w = untouched_vertices(g, g.all_vertices(), a, a_side);
            rec.b_size = static_cast<long long>(w.count());
            long long chi_w = 0;
            if (rec.b_size) {
                try {
                    chi_w = chromatic_number(g.induced(w), caps.solver);
                } catch (const CapExceeded& e) {
                    out.error_code = "oracle-cap";
                    out.error_detail = e.what();
                    return out;
                }
            }
            rec.b_chromatic = chi_w;
            if (chi_w >= c) {
                PairCertificate cert;
                cert.mode = PairMode::Chi;
                cert.a = a_side;
                cert.b = w;
                cert.a_denseness = dens;
                cert.a_required = a_required;
                cert.b_chromatic = chi_w;
                cert.c = c;
                cert.p = p;
                cert.q = q;
                cert.seed = seed;
                cert.route = "index-scan";
                cert.index_set = idx;
                out.kind = PairSearchOutcome::Kind::Found;
                out.certificate = std::move(cert);
                return out;
            }
        }
        trace.scan.push_back(std::move(rec));
    }

    if (!exhaustive) {
        // without the full family the remainder decomposition below is not a
        // cover, so a sound not-found cannot be reported
        out.error_code = "sampled-scan-inconclusive";
        out.error_detail = "index family of size " + std::to_string(family_size)
            + " was sampled, not enumerated; no sound bound trace exists";
        return out;
    }

    // assemble the coloring: rock part, cover neighborhood, then the
    // remainder batched by first index set avoiding each vertex
    trace.failed_step = "index-scan";
    trace.coloring.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    int palette = 0;
    {
        TracePiece piece;
        piece.kind = "rock";
        piece.vertices = a.to_vector();
        std::vector<int> ids;
        Graph sub = g.induced(a, &ids);
        std::vector<int> col = exact_coloring(sub, caps.solver);
        int width = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            trace.coloring[static_cast<std::size_t>(ids[i])] = palette + col[i];
            width = std::max(width, col[i] + 1);
        }
        piece.palette_base = palette;
        piece.palette_size = width;
        palette += width;
        trace.pieces.push_back(std::move(piece));
    }
    Bitset uncovered = g.all_vertices() - a;
    {
        Bitset w0(static_cast<std::size_t>(g.vertex_count()));
        for (int v = uncovered.first(); v >= 0; v = uncovered.next(v))
            if (g.neighbors(v).intersects(x))
                w0.set(static_cast<std::size_t>(v));
        if (w0.any()) {
            TracePiece piece;
            piece.kind = "cover-neighbors";
            piece.vertices = w0.to_vector();
            std::vector<int> ids;
            Graph sub = g.induced(w0, &ids);
            std::vector<int> order(static_cast<std::size_t>(sub.vertex_count()));
            for (std::size_t i = 0; i < order.size(); ++i)
                order[i] = static_cast<int>(i);
            std::vector<int> col = greedy_coloring(sub, order);
            int width = 0;
            for (std::size_t i = 0; i < col.size(); ++i) {
                trace.coloring[static_cast<std::size_t>(ids[i])] = palette + col[i];
                width = std::max(width, col[i] + 1);
            }
            piece.palette_base = palette;
            piece.palette_size = width;
            palette += width;
            trace.pieces.push_back(std::move(piece));
            uncovered -= w0;
        }
    }
    for (const auto& idx : index_sets) {
        if (uncovered.none())
            break;
        VertexSet a_side = union_with_parts(x, fam, idx);
        Bitset batch(static_cast<std::size_t>(g.vertex_count()));
        for (int v = uncovered.first(); v >= 0; v = uncovered.next(v))
            if (!g.neighbors(v).intersects(a_side))
                batch.set(static_cast<std::size_t>(v));
        if (batch.none())
            continue;
        TracePiece piece;
        piece.kind = "index-set";
        piece.index_set = idx;
        piece.vertices = batch.to_vector();
        std::vector<int> ids;
        Graph sub = g.induced(batch, &ids);
        std::vector<int> order(static_cast<std::size_t>(sub.vertex_count()));
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = static_cast<int>(i);
        std::vector<int> col = greedy_coloring(sub, order);
        int width = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            trace.coloring[static_cast<std::size_t>(ids[i])] = palette + col[i];
            width = std::max(width, col[i] + 1);
        }
        piece.palette_base = palette;
        piece.palette_size = width;
        palette += width;
        trace.pieces.push_back(std::move(piece));
        uncovered -= batch;
    }
    if (uncovered.any())
        throw GraphError("find_pair_chi: remainder decomposition failed to cover the graph");
    trace.color_count = palette;
    trace.notes.push_back("cover neighborhood and remainders colored greedily");
    out.kind = PairSearchOutcome::Kind::NotFound;
    out.trace = std::move(trace);
    return out;
}

PairSearchOutcome find_pair_mindeg(const Graph& g, int p, int q, long long s, long long c, std::uint64_t seed,
    const PipelineCaps& caps)
{
    PairSearchOutcome out;
    PeelResult peel;
    try {
        peel = peel_rocks(g, p, static_cast<int>(s), caps.rock);
    } catch (const CapExceeded& e) {
        out.error_code = "oracle-cap";
        out.error_detail = e.what();
        return out;
    }

    BoundTrace trace;
    trace.mode = PairMode::MinDeg;
    trace.p = p;
    trace.q = q;
    trace.s = s;
    trace.c = c;
    trace.seed = seed;

    // escape route: a peeled rock whose non-neighbourhood is already dense
    for (const RockCertificate& r : peel.sequence.rocks) {
        trace.peeled_rocks.push_back(r.set.to_vector());
        Rational rock_dens(r.internal_edges, static_cast<long long>(r.set.count()));
        trace.peeled_rock_denseness.push_back(rock_dens);
        VertexSet z = untouched_vertices(g, g.all_vertices(), r.set, r.set);
        Rational z_dens = denseness(g, z);
        trace.peeled_complement_denseness.push_back(z_dens);
        if (z.any() && z_dens >= Rational(c)) {
            PairCertificate cert;
            cert.mode = PairMode::MinDeg;
            cert.a = r.set;
            cert.b = z;
            cert.a_denseness = rock_dens;
            cert.a_required = Rational(p);
            cert.b_denseness = z_dens;
            cert.c = c;
            cert.p = p;
            cert.q = q;
            cert.s = s;
            cert.seed = seed;
            cert.route = "peeled-rock-complement";
            out.kind = PairSearchOutcome::Kind::Found;
            out.certificate = std::move(cert);
            return out;
        }
    }

    std::optional<RockCertificate> rock;
    try {
        rock = find_rock_exact(g, p, caps.rock, &peel.residual);
    } catch (const CapExceeded& e) {
        out.error_code = "oracle-cap";
        out.error_detail = e.what();
        return out;
    }
    if (!rock) {
        if (peel.sequence.rocks.empty()) {
            out.error_code = "no-rock";
            out.error_detail = "no nonempty set reaches denseness " + std::to_string(p);
            return out;
        }
        trace.failed_step = "residual-no-rock";
        trace.notes.push_back("peeling exhausted every rock; the residual graph has none");
    }

    const VertexSet scope = peel.residual;
    if (rock) {
        const VertexSet& a = rock->set;
        long long a_size = static_cast<long long>(a.count());
        trace.rock = a;
        MatchingDecomposition decomp = decompose(g, q, &a);
        const VertexSet& x = decomp.cover;
        trace.cover = x;
        trace.decomposition = decomp;

        int k = 8 * p + 4, half = 4 * p + 2;
        long long family_size = binomial(k, half);
        bool exhaustive = family_size <= caps.family_cap;
        long long threshold = p * a_size / 32;

        PartitionCheckMode mode;
        mode.exhaustive = exhaustive;
        mode.sample_count = caps.sample_count;
        GoodPartitionSearch search = find_good_partition(g, a, x, PartitionVariant::MinDeg, p, threshold, seed,
            caps.max_tries, mode, caps.family_cap);
        if (search.status != GoodPartitionSearch::Status::Found) {
            out.error_code = "partition-search-exhausted";
            out.error_detail = "no trial met the per-index-set edge threshold " + std::to_string(threshold);
            out.partition_diagnostics = search.trial;
            return out;
        }
        const PartitionFamily& fam = *search.family;
        trace.ground_vertices = search.trial->ground_vertices;
        trace.partition_assignment = search.trial->assignment;

        const Rational a_required(p, 32);
        Bitset empty_base(static_cast<std::size_t>(g.vertex_count()));
        auto index_sets = scanned_index_sets(*search.trial, k, half, exhaustive);
        for (const auto& idx : index_sets) {
            IndexScanRecord rec;
            rec.index_set = idx;
            VertexSet a_side = union_with_parts(empty_base, fam, idx);
            rec.a_side_size = static_cast<long long>(a_side.count());
            rec.a_side_edges = rec.a_side_size ? g.edges_within(a_side) : 0;
            Rational dens = rec.a_side_size ? Rational(rec.a_side_edges, rec.a_side_size) : Rational(0);
            rec.a_side_passed = rec.a_side_size > 0 && dens >= a_required;
            if (rec.a_side_passed) {
                VertexSet w = untouched_vertices(g, scope, a, a_side);
                rec.b_size = static_cast<long long>(w.count());
                Rational w_dens = denseness(g, w);
                rec.b_denseness = w_dens;
                if (w.any() && w_dens >= Rational(c)) {
                    PairCertificate cert;
                    cert.mode = PairMode::MinDeg;
                    cert.a = a_side;
                    cert.b = w;
                    cert.a_denseness = dens;
                    cert.a_required = a_required;
                    cert.b_denseness = w_dens;
                    cert.c = c;
                    cert.p = p;
                    cert.q = q;
                    cert.s = s;
                    cert.seed = seed;
                    cert.route = "index-scan";
                    cert.index_set = idx;
                    out.kind = PairSearchOutcome::Kind::Found;
                    out.certificate = std::move(cert);
                    return out;
                }
            }
            trace.scan.push_back(std::move(rec));
        }
        if (!exhaustive) {
            out.error_code = "sampled-scan-inconclusive";
            out.error_detail = "index family of size " + std::to_string(family_size) + " was sampled, not enumerated";
            return out;
        }
        trace.failed_step = "index-scan";
    }

    // edge-count audit over the residual scope
    trace.scope_vertex_count = static_cast<long long>(scope.count());
    trace.scope_edge_count = g.edges_within(scope);
    if (rock) {
        const VertexSet& a = rock->set;
        long long inside = g.edges_within(a);
        long long outside = g.edges_within(scope - a);
        trace.edges_inside_rock = inside;
        trace.edges_outside_rock = outside;
        trace.edges_one_end_in_rock = trace.scope_edge_count - inside - outside;
    }
    out.kind = PairSearchOutcome::Kind::NotFound;
    out.trace = std::move(trace);
    return out;
}

namespace {

    struct SubsetTables {
        int n = 0;
        std::vector<std::uint32_t> adj;
        std::vector<long long> edges;
        std::vector<char> independent;
        std::vector<int> chi; // filled on demand

        SubsetTables(const Graph& g) : n(g.vertex_count())
        {
            std::size_t total = 1ULL << n;
            adj.assign(static_cast<std::size_t>(n), 0);
            for (int u = 0; u < n; ++u)
                for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
                    adj[static_cast<std::size_t>(u)] |= 1U << v;
            edges.assign(total, 0);
            independent.assign(total, 1);
            for (std::size_t m = 1; m < total; ++m) {
                int low = __builtin_ctzll(m);
                std::uint32_t rest = static_cast<std::uint32_t>(m) & ~(1U << low);
                edges[m] = edges[rest] + __builtin_popcount(adj[static_cast<std::size_t>(low)] & rest);
                independent[m] = independent[rest] && !(adj[static_cast<std::size_t>(low)] & rest);
            }
        }

        void fill_chi()
        {
            if (!chi.empty())
                return;
            std::size_t total = 1ULL << n;
            chi.assign(total, 0);
            for (std::size_t m = 1; m < total; ++m) {
                if (independent[m]) {
                    chi[m] = 1;
                    continue;
                }
                int low = __builtin_ctzll(m);
                int best = INT_MAX;
                // iterate independent subsets containing the lowest vertex
                std::uint32_t mask = static_cast<std::uint32_t>(m);
                for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
                    if (!(sub & (1U << low)) || !independent[sub])
                        continue;
                    best = std::min(best, chi[mask & ~sub] + 1);
                }
                chi[m] = best;
            }
        }
    };

} // namespace

std::optional<std::pair<VertexSet, VertexSet>> brute_force_pair_at(const Graph& g, const Rational& a_level,
    long long b_level, BruteMode mode, int cap)
{
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("brute_force_pair: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    if (n == 0)
        return std::nullopt;
    SubsetTables tab(g);
    if (mode == BruteMode::Chi || mode == BruteMode::ChiChi)
        tab.fill_chi();

    std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
    std::vector<char> dense_in;
    if (mode == BruteMode::MinDeg) {
        // dense_in[m]: some subset of m has |E| >= b_level * |S|
        dense_in.assign(1ULL << n, 0);
        for (std::uint32_t m = 1; m <= full; ++m) {
            if (tab.edges[m] >= b_level * __builtin_popcount(m)) {
                dense_in[m] = 1;
                continue;
            }
            for (std::uint32_t rest = m; rest;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                if (dense_in[m & ~(1U << v)]) {
                    dense_in[m] = 1;
                    break;
                }
            }
        }
    }

    auto as_set = [&](std::uint32_t m) {
        Bitset b(static_cast<std::size_t>(n));
        for (std::uint32_t r = m; r;) {
            int v = __builtin_ctz(r);
            r &= r - 1;
            b.set(static_cast<std::size_t>(v));
        }
        return b;
    };

    for (std::uint32_t a = 1; a <= full && a != 0; ++a) {
        int a_count = __builtin_popcount(a);
        bool a_ok = false;
        if (mode == BruteMode::ChiChi)
            a_ok = tab.chi[a] >= b_level;
        else
            a_ok = Rational(tab.edges[a], a_count) >= a_level;
        if (!a_ok)
            continue;
        std::uint32_t closed = a;
        for (std::uint32_t r = a; r;) {
            int v = __builtin_ctz(r);
            r &= r - 1;
            closed |= tab.adj[static_cast<std::size_t>(v)];
        }
        std::uint32_t bmax = full & ~closed;
        if (!bmax)
            continue;
        if (mode == BruteMode::MinDeg) {
            if (!dense_in[bmax])
                continue;
            // walk down to a dense witness
            std::uint32_t m = bmax;
            while (tab.edges[m] < b_level * __builtin_popcount(m)) {
                std::uint32_t nextm = 0;
                for (std::uint32_t r = m; r;) {
                    int v = __builtin_ctz(r);
                    r &= r - 1;
                    if (dense_in[m & ~(1U << v)]) {
                        nextm = m & ~(1U << v);
                        break;
                    }
                }
                m = nextm;
            }
            return std::make_pair(as_set(a), as_set(m));
        }
        if (tab.chi[bmax] >= b_level)
            return std::make_pair(as_set(a), as_set(bmax));
    }
    return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> brute_force_pair(const Graph& g, long long c, BruteMode mode, int cap)
{
    return brute_force_pair_at(g, Rational(c), c, mode, cap);
}

PairAudit verify_pair(const Graph& g, const PairCertificate& cert, long long c, const SolverCaps& caps)
{
    PairAudit audit;
    auto fail = [&](const std::string& why) {
        audit.pass = false;
        audit.failure = why;
        return audit;
    };
    require_host(g, cert.a, "verify_pair");
    require_host(g, cert.b, "verify_pair");
    if (cert.a.none() || cert.b.none())
        return fail("both sides must be nonempty");
    if (cert.a.intersects(cert.b))
        return fail("the two sides intersect");
    for (int v = cert.a.first(); v >= 0; v = cert.a.next(v)) {
        Bitset crossing = g.neighbors(v) & cert.b;
        if (crossing.any()) {
            audit.witness_edge = {v, crossing.first()};
            return fail("an edge joins the two sides");
        }
    }
    Rational dens_a = denseness(g, cert.a);
    if (dens_a != cert.a_denseness)
        return fail("stated a-side denseness " + cert.a_denseness.str() + " differs from recomputed " + dens_a.str());
    if (dens_a < cert.a_required)
        return fail("a-side denseness " + dens_a.str() + " is below the required level " + cert.a_required.str());
    if (cert.mode == PairMode::Chi) {
        long long chi_b = chromatic_number(g.induced(cert.b), caps);
        if (chi_b != cert.b_chromatic)
            return fail("stated b-side chromatic number " + std::to_string(cert.b_chromatic)
                + " differs from recomputed " + std::to_string(chi_b));
        if (chi_b < c)
            return fail("b-side chromatic number " + std::to_string(chi_b) + " is below c = " + std::to_string(c));
    } else {
        Rational dens_b = denseness(g, cert.b);
        if (dens_b != cert.b_denseness)
            return fail("stated b-side denseness differs from recomputed " + dens_b.str());
        if (dens_b < Rational(c))
            return fail("b-side denseness " + dens_b.str() + " is below c = " + std::to_string(c));
    }
    return audit;
}

TraceAudit verify_bound_trace(const Graph& g, const BoundTrace& trace)
{
    TraceAudit audit;
    auto fail = [&](const std::string& why) {
        audit.pass = false;
        audit.failure = why;
        return audit;
    };
    if (trace.mode != PairMode::Chi)
        return fail("only chi-mode traces carry a coloring");
    if (!valid_coloring(g, trace.coloring))
        return fail("the recorded coloring is not a proper coloring");
    int used = 0;
    for (int c : trace.coloring)
        used = std::max(used, c + 1);
    if (used > trace.color_count)
        return fail("coloring uses " + std::to_string(used) + " colors, more than the stated "
            + std::to_string(trace.color_count));
    return audit;
}

} // namespace ac
