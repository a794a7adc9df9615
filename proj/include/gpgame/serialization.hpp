#pragma once

#include <string>

#include <json.hpp>

#include "gpgame/equilibrium.hpp"
#include "gpgame/meanfield.hpp"
#include "gpgame/simulation.hpp"

namespace gpgame {

using json = nlohmann::ordered_json;

/// Doubles in CSV output: '.' decimal separator, 12 significant digits.
std::string format_double(double v);

json params_to_json(const ModelParams& params);
/// Accepts keys k, theta, lambda, p, g, n_agents ("inf" or integer; missing
/// means infinite).  Validates before returning.
ModelParams params_from_json(const json& j);

/// Threshold slots serialize as an integer or one of "never"/"inf"/"always".
json threshold_value_to_json(const ThresholdValue& tau);
ThresholdValue threshold_value_from_json(const json& j);

json profile_to_json(const ThresholdProfile& profile);
/// Expects {"kind": "low"|"high", "taus": [...]}.
ThresholdProfile profile_from_json(const json& j);

json mc_estimate_to_json(const McEstimate& est);
json curve_to_json(const MfpfCurve& curve);
json dynamics_to_json(const DynamicsResult& result);
json quadrature_audit_to_json(const QuadratureAuditReport& report);
json deviation_audit_to_json(const DeviationAuditReport& report, bool include_entries = false);

}  // namespace gpgame
