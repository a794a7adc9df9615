#include "gpgame/params.hpp"

#include <string>

namespace gpgame {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_positive_rate: return "NonPositiveRate";
    case ErrorCode::invalid_shape: return "InvalidShape";
    case ErrorCode::zero_exponent: return "ZeroExponent";
    case ErrorCode::invalid_gain: return "InvalidGain";
    case ErrorCode::too_few_agents: return "TooFewAgents";
    case ErrorCode::too_many_agents: return "TooManyAgents";
    case ErrorCode::finite_agents_required: return "FiniteAgentsRequired";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::wrong_sign: return "WrongSign";
    case ErrorCode::degenerate_bound: return "DegenerateBound";
    case ErrorCode::profile_length_mismatch: return "ProfileLengthMismatch";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::no_solution: return "NoSolution";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "UnknownError";
}

ModelParams validate_params(const ModelParams& raw) {
  if (raw.k < 1) raise(ErrorCode::invalid_shape, "prior shape k must be a positive integer");
  if (!(raw.theta > 0.0)) raise(ErrorCode::non_positive_rate, "prior rate theta must be > 0");
  if (!(raw.lambda > 0.0)) raise(ErrorCode::non_positive_rate, "emission rate lambda must be > 0");
  if (raw.p == 0) raise(ErrorCode::zero_exponent, "cost exponent p must be nonzero");
  if (!(raw.g > 0.0)) raise(ErrorCode::invalid_gain, "gain g must be > 0");
  if (raw.n_agents && *raw.n_agents < 2) {
    raise(ErrorCode::too_few_agents,
          "n_agents must be >= 2 (got " + std::to_string(*raw.n_agents) + ")");
  }
  return raw;
}

}  // namespace gpgame
