#ifndef AC_JSON_IO_HPP
#define AC_JSON_IO_HPP

#include "ac/matching.hpp"
#include "ac/params.hpp"
#include "ac/partition.hpp"
#include "ac/pipeline.hpp"
#include "ac/rock.hpp"
#include "ac/tournament.hpp"

#include <json.hpp>

#include <string>

namespace ac {

// Insertion-ordered documents keep serialized output byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json set_json(const VertexSet& s);
VertexSet set_from_json(const Json& j, std::size_t capacity);
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json rock_certificate_json(const RockCertificate& cert);
RockCertificate rock_certificate_from_json(const Json& j);
Json rock_audit_json(const RockAudit& audit);

Json peel_result_json(const PeelResult& peel);

Json matching_decomposition_json(const MatchingDecomposition& d);
MatchingDecomposition matching_decomposition_from_json(const Json& j);
Json decomposition_audit_json(const DecompositionAudit& audit);

Json partition_family_json(const PartitionFamily& fam);
Json partition_trial_json(const PartitionTrial& trial);
Json partition_search_json(const GoodPartitionSearch& search);

Json pair_certificate_json(const PairCertificate& cert);
PairCertificate pair_certificate_from_json(const Json& j);
Json bound_trace_json(const BoundTrace& trace);
Json pair_outcome_json(const PairSearchOutcome& outcome);
Json pair_audit_json(const PairAudit& audit);

Json chi_parameters_json(const ChiParameters& par);
Json mindeg_parameters_json(const MindegParameters& par);

Json tournament_pair_json(const TournamentPairCertificate& cert);
TournamentPairCertificate tournament_pair_from_json(const Json& j, std::size_t capacity);

std::string document_kind(const Json& j);

} // namespace ac

#endif
