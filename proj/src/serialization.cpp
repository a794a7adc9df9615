#include "gpgame/serialization.hpp"

#include <cstdio>

namespace gpgame {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json params_to_json(const ModelParams& params) {
  json j;
  j["k"] = params.k;
  j["theta"] = params.theta;
  j["lambda"] = params.lambda;
  j["p"] = params.p;
  j["g"] = params.g;
  if (params.n_agents) {
    j["n_agents"] = *params.n_agents;
  } else {
    j["n_agents"] = "inf";
  }
  return j;
}

ModelParams params_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorCode::parse_error, "parameter document must be a JSON object");
  ModelParams params;
  try {
    if (j.contains("k")) params.k = j.at("k").get<int>();
    if (j.contains("theta")) params.theta = j.at("theta").get<double>();
    if (j.contains("lambda")) params.lambda = j.at("lambda").get<double>();
    if (j.contains("p")) params.p = j.at("p").get<int>();
    if (j.contains("g")) params.g = j.at("g").get<double>();
    if (j.contains("n_agents") && !j.at("n_agents").is_null()) {
      const auto& n = j.at("n_agents");
      if (n.is_string()) {
        if (n.get<std::string>() != "inf") {
          raise(ErrorCode::parse_error, "n_agents must be an integer or \"inf\"");
        }
        params.n_agents.reset();
      } else {
        params.n_agents = n.get<int>();
      }
    }
  } catch (const json::exception& e) {
    raise(ErrorCode::parse_error, std::string("bad parameter document: ") + e.what());
  }
  return validate_params(params);
}

json threshold_value_to_json(const ThresholdValue& tau) {
  if (tau.is_never()) return "never";
  if (tau.is_unbounded()) return "inf";
  if (tau.is_always()) return "always";
  return tau.tau();
}

ThresholdValue threshold_value_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "never") return ThresholdValue::never();
    if (s == "inf") return ThresholdValue::unbounded();
    if (s == "always") return ThresholdValue::always();
    raise(ErrorCode::parse_error, "unknown threshold sentinel: " + s);
  }
  if (!j.is_number_integer()) {
    raise(ErrorCode::parse_error, "threshold must be an integer or a sentinel string");
  }
  const int t = j.get<int>();
  if (t < 0) return ThresholdValue::never();  // -1 sentinel at the API boundary
  return ThresholdValue(t);
}

json profile_to_json(const ThresholdProfile& profile) {
  json j;
  j["kind"] = policy_kind_name(profile.kind);
  json taus = json::array();
  for (const auto& tau : profile.taus) taus.push_back(threshold_value_to_json(tau));
  j["taus"] = std::move(taus);
  return j;
}

ThresholdProfile profile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("taus")) {
    raise(ErrorCode::parse_error, "profile must be {\"kind\": ..., \"taus\": [...]}");
  }
  ThresholdProfile profile;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "low") {
    profile.kind = PolicyKind::low;
  } else if (kind == "high") {
    profile.kind = PolicyKind::high;
  } else {
    raise(ErrorCode::parse_error, "profile kind must be \"low\" or \"high\"");
  }
  for (const auto& item : j.at("taus")) {
    profile.taus.push_back(threshold_value_from_json(item));
  }
  return profile;
}

json mc_estimate_to_json(const McEstimate& est) {
  json j;
  j["mean"] = est.mean;
  j["stderr"] = est.stderr_of_mean;
  j["n_samples"] = est.n_samples;
  j["seed"] = est.seed;
  return j;
}

json curve_to_json(const MfpfCurve& curve) {
  json j;
  j["taus"] = curve.taus;
  json values = json::array(), stderrs = json::array();
  for (const auto& est : curve.values) {
    values.push_back(est.mean);
    stderrs.push_back(est.stderr_of_mean);
  }
  j["values"] = std::move(values);
  j["stderrs"] = std::move(stderrs);
  j["n_samples"] = curve.n_samples;
  j["seed"] = curve.seed;
  return j;
}

json dynamics_to_json(const DynamicsResult& result) {
  json j;
  j["converged"] = result.converged;
  j["rounds"] = result.rounds;
  j["condition_warning"] = result.condition_warning;
  json trace = json::array();
  for (const auto& round : result.trace) {
    json r;
    r["round"] = round.round;
    json taus = json::array();
    for (const auto& tau : round.taus) taus.push_back(threshold_value_to_json(tau));
    r["taus"] = std::move(taus);
    r["changed"] = round.n_changed;
    trace.push_back(std::move(r));
  }
  j["trace"] = std::move(trace);
  return j;
}

json quadrature_audit_to_json(const QuadratureAuditReport& report) {
  json j;
  j["method"] = "quadrature";
  j["pass"] = report.pass;
  j["tolerance"] = report.tolerance;
  j["max_gain"] = report.max_gain;
  j["n_deviations"] = report.n_deviations;
  j["worst"] = {{"agent", report.worst.agent},
                {"deviation", threshold_value_to_json(report.worst.deviation)},
                {"gain", report.worst.gain}};
  return j;
}

json deviation_audit_to_json(const DeviationAuditReport& report, bool include_entries) {
  json j;
  j["method"] = "monte-carlo";
  j["pass"] = report.pass;
  j["epsilon"] = report.epsilon;
  j["max_gain"] = report.max_gain;
  j["max_upper99"] = report.max_upper99;
  j["n_realizations"] = report.n_realizations;
  j["seed"] = report.seed;
  j["worst"] = {{"agent", report.worst.agent},
                {"deviation", threshold_value_to_json(report.worst.deviation)},
                {"gain", report.worst.gain},
                {"stderr", report.worst.stderr_of_gain},
                {"upper99", report.worst.upper99}};
  if (include_entries) {
    json entries = json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"agent", e.agent},
                         {"deviation", threshold_value_to_json(e.deviation)},
                         {"gain", e.gain},
                         {"stderr", e.stderr_of_gain},
                         {"upper99", e.upper99}});
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

}  // namespace gpgame
