#include "ac/partition.hpp"

#include "ac/matching.hpp"
#include "ac/rng.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace ac {

double matching_bound(long long m)
{
    if (m < 1)
        throw GraphError("matching_bound: m must be positive");
    return std::exp(-static_cast<double>(m) / 32.0);
}

double degree_sum_bound(long long m, long long d)
{
    if (m < 1 || d < 1)
        throw GraphError("degree_sum_bound: m and d must be positive");
    return std::exp(-static_cast<double>(m) / (8.0 * static_cast<double>(d)));
}

PartitionFamily sample_partition(const VertexSet& ground, int k, std::uint64_t seed)
{
    if (k < 1)
        throw GraphError("sample_partition: k must be positive");
    PartitionFamily fam;
    fam.k = k;
    fam.ground = ground;
    fam.parts.assign(static_cast<std::size_t>(k), Bitset(ground.capacity()));
    Rng rng(seed);
    for (int v = ground.first(); v >= 0; v = ground.next(v))
        fam.parts[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)))].set(static_cast<std::size_t>(v));
    return fam;
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > LLONG_MAX / (n - k + i))
            return LLONG_MAX;
        r = r * (n - k + i) / i;
    }
    return r;
}

namespace {

    struct SlotCounts {
        // edge counts between slot pairs; slot k is the cover
        int k;
        std::vector<long long> m; // (k+1) x (k+1), upper triangle incl diagonal

        SlotCounts(int k_) : k(k_), m(static_cast<std::size_t>((k_ + 1) * (k_ + 1)), 0) {}
        long long& at(int i, int j)
        {
            if (i > j)
                std::swap(i, j);
            return m[static_cast<std::size_t>(i * (k + 1) + j)];
        }
    };

    long long count_for(const SlotCounts& sc, const std::vector<int>& idx, bool with_cover, int k)
    {
        std::vector<char> in(static_cast<std::size_t>(k + 1), 0);
        for (int i : idx)
            in[static_cast<std::size_t>(i)] = 1;
        if (with_cover)
            in[static_cast<std::size_t>(k)] = 1;
        long long total = 0;
        for (int i = 0; i <= k; ++i) {
            if (!in[static_cast<std::size_t>(i)])
                continue;
            for (int j = i; j <= k; ++j)
                if (in[static_cast<std::size_t>(j)])
                    total += sc.m[static_cast<std::size_t>(i * (k + 1) + j)];
        }
        return total;
    }

    // next combination in lexicographic order; false when exhausted
    bool next_combination(std::vector<int>& c, int k)
    {
        int h = static_cast<int>(c.size());
        for (int i = h - 1; i >= 0; --i) {
            if (c[static_cast<std::size_t>(i)] < k - (h - i)) {
                ++c[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < h; ++j)
                    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    }

} // namespace

GoodPartitionSearch find_good_partition(const Graph& g, const VertexSet& a, const VertexSet& x,
    PartitionVariant variant, int p, long long threshold, std::uint64_t seed, int max_tries,
    const PartitionCheckMode& mode, long long family_cap)
{
    require_host(g, a, "find_good_partition");
    require_host(g, x, "find_good_partition");
    if (!x.subset_of(a))
        throw GraphError("find_good_partition: cover must lie inside the set");
    if (p < 1)
        throw GraphError("find_good_partition: p must be positive");
    if (max_tries < 1)
        throw GraphError("find_good_partition: max_tries must be positive");

    const int k = variant == PartitionVariant::Chi ? 4 * p + 2 : 8 * p + 4;
    const int half = variant == PartitionVariant::Chi ? 2 * p + 1 : 4 * p + 2;
    const bool with_cover = variant == PartitionVariant::Chi;

    GoodPartitionSearch out;
    out.variant = variant;
    out.p = p;
    out.threshold = threshold;
    out.set = a;
    out.cover = x;
    out.family_size = binomial(k, half);
    if (mode.exhaustive && out.family_size > family_cap) {
        out.status = GoodPartitionSearch::Status::FamilyTooLarge;
        return out;
    }

    Bitset ground = a - x;
    std::vector<int> ground_vs = ground.to_vector();
    std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()), -1);
    EdgeList edges = g.edge_list_within(a);

    const bool record_all = out.family_size <= 4096;
    long long best_min = LLONG_MIN;

    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(attempt);
        PartitionFamily fam = sample_partition(ground, k, trial_seed);
        fam.half_size = half;

        PartitionTrial trial;
        trial.seed = trial_seed;
        trial.ground_vertices = ground_vs;
        trial.assignment.assign(ground_vs.size(), 0);
        for (int i = 0; i < k; ++i)
            for (int v = fam.parts[static_cast<std::size_t>(i)].first(); v >= 0;
                 v = fam.parts[static_cast<std::size_t>(i)].next(v))
                slot[static_cast<std::size_t>(v)] = i;
        for (int v = x.first(); v >= 0; v = x.next(v))
            slot[static_cast<std::size_t>(v)] = k;
        for (std::size_t i = 0; i < ground_vs.size(); ++i)
            trial.assignment[i] = slot[static_cast<std::size_t>(ground_vs[i])];

        SlotCounts counts(k);
        for (auto [u, v] : edges)
            ++counts.at(slot[static_cast<std::size_t>(u)], slot[static_cast<std::size_t>(v)]);

        trial.statistical = !mode.exhaustive;
        trial.min_edges = LLONG_MAX;
        trial.success = true;

        // sampled runs are small and keep every record (downstream scans
        // replay them); huge exhaustive families keep failures and a prefix
        auto check_one = [&](const std::vector<int>& idx) {
            long long got = count_for(counts, idx, with_cover, k);
            bool pass = got >= threshold;
            ++trial.checked_count;
            trial.min_edges = std::min(trial.min_edges, got);
            if (record_all || !mode.exhaustive || !pass || trial.checked.size() < 4)
                if (trial.checked.size() < 4096)
                    trial.checked.push_back({idx, got, pass});
            if (!pass) {
                trial.success = false;
                if (!trial.witness)
                    trial.witness = idx;
            }
            return pass;
        };

        if (mode.exhaustive) {
            std::vector<int> idx(static_cast<std::size_t>(half));
            for (int i = 0; i < half; ++i)
                idx[static_cast<std::size_t>(i)] = i;
            do {
                if (!check_one(idx))
                    break;
            } while (next_combination(idx, k));
        } else {
            Rng pick(trial_seed ^ 0x5eedFULL);
            std::vector<int> pool(static_cast<std::size_t>(k));
            for (int s = 0; s < mode.sample_count; ++s) {
                for (int i = 0; i < k; ++i)
                    pool[static_cast<std::size_t>(i)] = i;
                for (int i = 0; i < half; ++i) {
                    int j = i + static_cast<int>(pick.below(static_cast<std::uint64_t>(k - i)));
                    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
                }
                std::vector<int> idx(pool.begin(), pool.begin() + half);
                std::sort(idx.begin(), idx.end());
                if (!check_one(idx))
                    break;
            }
        }
        if (trial.min_edges == LLONG_MAX)
            trial.min_edges = 0;

        if (trial.success) {
            out.status = GoodPartitionSearch::Status::Found;
            out.tries_used = attempt + 1;
            out.family = std::move(fam);
            out.trial = std::move(trial);
            return out;
        }
        if (trial.min_edges > best_min) {
            best_min = trial.min_edges;
            out.trial = std::move(trial);
            out.family = std::move(fam);
        }
        out.tries_used = attempt + 1;
    }
    out.status = GoodPartitionSearch::Status::Exhausted;
    return out;
}

} // namespace ac
