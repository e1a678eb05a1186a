#ifndef AC_PARTITION_HPP
#define AC_PARTITION_HPP

#include "ac/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ac {

// Tail bound on the event that at most m/8 edges of an m-edge matching land
// with both ends in an independent half-sample: e^{-m/32}.
double matching_bound(long long m);

// Tail bound on the event that a half-sampled sum of degrees d_v <= d with
// total m stays at or below m/4: e^{-m/(8d)}.
double degree_sum_bound(long long m, long long d);

struct PartitionFamily {
    int k = 0;
    int half_size = 0;
    VertexSet ground;
    std::vector<VertexSet> parts; // disjoint, union = ground
};

// Assign every ground vertex a part uniformly and independently,
// reproducibly from the seed. half_size is left 0 (set by the caller).
PartitionFamily sample_partition(const VertexSet& ground, int k, std::uint64_t seed);

enum class PartitionVariant {
    Chi,   // k = 4p+2, half = 2p+1, count edges inside cover + parts union
    MinDeg // k = 8p+4, half = 4p+2, count edges inside A_I only
};

struct CheckedIndexSet {
    std::vector<int> parts; // 0-based part indices, ascending
    long long edges = 0;
    bool pass = false;
};

struct PartitionTrial {
    std::uint64_t seed = 0;
    std::vector<int> ground_vertices;  // ascending
    std::vector<int> assignment;       // part index per ground vertex
    std::vector<CheckedIndexSet> checked; // recorded subset of the checked family
    long long checked_count = 0;
    long long min_edges = 0;           // worst count over every checked set
    bool success = false;
    bool statistical = false;          // verdict from sampled index sets only
    std::optional<std::vector<int>> witness; // a failing index set
};

struct PartitionCheckMode {
    bool exhaustive = true;
    int sample_count = 64; // used when exhaustive is false
};

struct GoodPartitionSearch {
    enum class Status { Found, Exhausted, FamilyTooLarge };
    Status status = Status::Exhausted;
    // context, echoed so audits can recompute every recorded count
    PartitionVariant variant = PartitionVariant::Chi;
    int p = 0;
    long long threshold = 0;
    VertexSet set;   // a
    VertexSet cover; // x
    long long family_size = 0;
    int tries_used = 0;
    std::optional<PartitionFamily> family; // the successful family
    std::optional<PartitionTrial> trial;   // success, or the best failing trial
};

// Retry sample_partition until some trial has every checked half-size index
// set reach the edge threshold. Exhaustive checking enumerates the whole
// family (refused above family_cap); sampled checking draws sample_count
// sets per trial and marks the verdict statistical.
GoodPartitionSearch find_good_partition(const Graph& g, const VertexSet& a, const VertexSet& x,
    PartitionVariant variant, int p, long long threshold, std::uint64_t seed, int max_tries,
    const PartitionCheckMode& mode = {}, long long family_cap = 1000000);

long long binomial(int n, int k); // saturating at LLONG_MAX

} // namespace ac

#endif
