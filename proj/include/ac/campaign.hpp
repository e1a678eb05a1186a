#ifndef AC_CAMPAIGN_HPP
#define AC_CAMPAIGN_HPP

#include "ac/json_io.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ac {

// Campaigns are self-describing: generator family and grid, mode, targets,
// surrogate search parameters, caps and seeds all live in the file, so a
// re-run reproduces the output byte for byte.
struct Campaign {
    std::string mode; // chi | mindeg | chi-chi | tournament
    long long t = 1;
    std::vector<long long> c_values;
    std::uint64_t seed_base = 0;
    std::string output_path;

    std::string family; // generator family, or "exhaustive"
    int n_min = 1;
    int n_max = 1;
    int count = 1; // instances per size (ignored for exhaustive)
    std::map<std::string, std::string> family_params;

    int p = 1, q = 2;
    long long s = 8;
    int max_tries = 32;

    int oracle_max_n = 12;
    SolverCaps solver;
    TournamentCaps tournament_caps;
};

Campaign parse_campaign(const std::string& text);
std::string campaign_to_text(const Campaign& c);

struct FrontierRow {
    long long t = 0;
    long long c = 0;
    bool has_value = false;
    long long threshold = 0; // max no-pair value observed
    std::string witness;
};

// thresholds must be non-decreasing in c within each t
bool frontier_monotone(const std::vector<FrontierRow>& rows);

struct CampaignResult {
    Json document;
    std::vector<FrontierRow> frontier;
};

// Worker count from ACPAIR_WORKERS (default 1); records are computed per
// instance independently and reduced in instance order, so the output does
// not depend on the worker count.
CampaignResult run_campaign(const Campaign& c);

// run + write output_path; returns the serialized bytes
std::string run_campaign_to_file(const Campaign& c);

} // namespace ac

#endif
