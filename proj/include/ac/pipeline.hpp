#ifndef AC_PIPELINE_HPP
#define AC_PIPELINE_HPP

#include "ac/exact.hpp"
#include "ac/graph.hpp"
#include "ac/matching.hpp"
#include "ac/partition.hpp"
#include "ac/rock.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ac {

enum class PairMode { Chi, MinDeg };

// An anticomplete pair with recomputable witnesses. The a-side guarantee the
// search targeted (p/32 for index-scan pairs, p for peeled-rock pairs) rides
// along so surrogate-parameter runs state exactly what they certify; the
// b-side witness is measured against the caller's c.
struct PairCertificate {
    PairMode mode = PairMode::Chi;
    VertexSet a, b;
    Rational a_denseness;
    Rational a_required;
    long long b_chromatic = 0; // chi mode
    Rational b_denseness;      // mindeg mode
    long long c = 0;
    int p = 0, q = 0;
    long long s = 0; // mindeg only
    std::uint64_t seed = 0;
    std::string route; // "index-scan" or "peeled-rock-complement"
    std::vector<int> index_set;
};

struct IndexScanRecord {
    std::vector<int> index_set;
    long long a_side_size = 0;
    long long a_side_edges = 0;
    bool a_side_passed = false;
    long long b_size = 0;
    std::optional<long long> b_chromatic;
    std::optional<Rational> b_denseness;
};

struct TracePiece {
    std::string kind; // "rock", "cover-neighbors", "index-set"
    std::vector<int> index_set;
    std::vector<int> vertices;
    int palette_base = 0;
    int palette_size = 0;
};

// Checkable record of a failed search. In chi mode it carries a proper
// coloring of the whole graph assembled from the rock part, the cover
// neighborhood and the per-index-set remainders, with disjoint palettes; in
// mindeg mode it carries the edge-count audit of the same decomposition.
struct BoundTrace {
    PairMode mode = PairMode::Chi;
    std::string failed_step; // "index-scan", "residual-no-rock"
    int p = 0, q = 0;
    long long s = 0;
    long long c = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> peeled_rocks; // mindeg
    std::vector<Rational> peeled_rock_denseness;
    std::vector<Rational> peeled_complement_denseness; // Z-route records
    VertexSet rock;
    VertexSet cover;
    std::optional<MatchingDecomposition> decomposition;
    std::vector<int> partition_assignment; // per ground vertex ascending
    std::vector<int> ground_vertices;
    std::vector<IndexScanRecord> scan;
    // chi mode
    std::vector<TracePiece> pieces;
    std::vector<int> coloring;
    int color_count = 0;
    // mindeg mode
    long long scope_vertex_count = 0;
    long long scope_edge_count = 0;
    long long edges_outside_rock = 0;
    long long edges_one_end_in_rock = 0;
    long long edges_inside_rock = 0;
    std::vector<std::string> notes;
};

struct PairSearchOutcome {
    enum class Kind { Found, NotFound, Error };
    Kind kind = Kind::Error;
    std::optional<PairCertificate> certificate;
    std::optional<BoundTrace> trace;
    std::string error_code;   // "no-rock", "partition-search-exhausted",
                              // "oracle-cap", "sampled-scan-inconclusive"
    std::string error_detail;
    std::optional<PartitionTrial> partition_diagnostics;
};

struct PipelineCaps {
    RockCaps rock;
    SolverCaps solver;
    int max_tries = 64;
    long long family_cap = 1000000;
    int sample_count = 64; // per-trial sampled index sets beyond the cap
};

PairSearchOutcome find_pair_chi(const Graph& g, int p, int q, long long c, std::uint64_t seed,
    const PipelineCaps& caps = {});

PairSearchOutcome find_pair_mindeg(const Graph& g, int p, int q, long long s, long long c, std::uint64_t seed,
    const PipelineCaps& caps = {});

enum class BruteMode { Chi, MinDeg, ChiChi };

// Exhaustive oracle: scans every candidate a-side; the anticomplete
// complement is closed upward for the chromatic checks and searched for a
// dense subset for the denseness checks.
std::optional<std::pair<VertexSet, VertexSet>> brute_force_pair(const Graph& g, long long c, BruteMode mode,
    int cap = 14);

// Generalized thresholds (rational a-side level), used by the consistency
// suites; the plain c/c form above wraps this.
std::optional<std::pair<VertexSet, VertexSet>> brute_force_pair_at(const Graph& g, const Rational& a_level,
    long long b_level, BruteMode mode, int cap = 14);

struct PairAudit {
    bool pass = true;
    std::string failure;
    std::optional<std::pair<int, int>> witness_edge;
};

// Recomputes every claim of the certificate from the graph alone.
PairAudit verify_pair(const Graph& g, const PairCertificate& cert, long long c, const SolverCaps& caps = {});

struct TraceAudit {
    bool pass = true;
    std::string failure;
};

// For chi-mode traces: the coloring must be a proper coloring of g using
// exactly color_count colors.
TraceAudit verify_bound_trace(const Graph& g, const BoundTrace& trace);

} // namespace ac

#endif
