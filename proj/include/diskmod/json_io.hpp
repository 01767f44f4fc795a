#pragma once

#include <json.hpp>

#include "diskmod/gleason.hpp"
#include "diskmod/modules.hpp"

namespace diskmod {

using json = nlohmann::ordered_json;

json to_json(const SampledFunction& f);
SampledFunction sampled_from_json(const json& j);

json to_json(const AnalyticElement& a);
AnalyticElement analytic_from_json(const json& j);

json to_json(const ATuple& t);
ATuple atuple_from_json(const json& j);

json to_json(const PeakSetSpec& e);
PeakSetSpec peak_set_from_json(const json& j);

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

ClassTag tag_from_string(const std::string& s);

json to_json(const LogIntegrabilityDiagnosis& d);
json to_json(const VerificationReport& r);
json to_json(const MobiusMap& m);
MobiusMap mobius_from_json(const json& j);
json to_json(const IsometryDecision& d);
json to_json(const PicardDecomposition& p);
json to_json(const PartDistance& d);
json to_json(const ObstructionReport& r);
json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const json& j);

}  // namespace diskmod
