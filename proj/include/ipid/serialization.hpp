#pragma once

#include <json.hpp>

#include "ipid/detector.hpp"
#include "ipid/evaluation.hpp"
#include "ipid/law.hpp"
#include "ipid/simulator.hpp"

namespace ipid {

using Json = nlohmann::json;

// Density/law schema:
//   {"period": T, "slots": [{"family":"gaussian","mean":m,"variance":v},
//                           {"family":"poisson","rate":r},
//                           {"family":"categorical","probs":[...]}]}
Json density_to_json(const DensitySpec& spec);
DensitySpec density_from_json(const Json& j);

Json law_to_json(const PeriodicLaw& law);
PeriodicLaw law_from_json(const Json& j);

// Detector state snapshots for checkpoint/resume. -inf SR components are
// stored as null.
Json cusum_state_to_json(const CusumState& s);
CusumState cusum_state_from_json(const Json& j);

Json bank_state_to_json(const BankState& s);
BankState bank_state_from_json(const Json& j);

Json trial_outcome_to_json(const TrialOutcome& t);

Json arl_to_json(const ArlEstimate& e);
Json cadd_to_json(const CaddEstimate& e);
Json tradeoff_row_to_json(const TradeoffRow& r);

// Doubles formatted with enough digits to round-trip bit-exactly.
std::string format_double(double x);

}  // namespace ipid
