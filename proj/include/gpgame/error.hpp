#pragma once

#include <stdexcept>
#include <string>

namespace gpgame {

/// Machine-readable failure reason carried by every library exception.
enum class ErrorCode {
  non_positive_rate,
  invalid_shape,
  zero_exponent,
  invalid_gain,
  too_few_agents,
  too_many_agents,
  finite_agents_required,
  domain_error,
  wrong_sign,
  degenerate_bound,
  profile_length_mismatch,
  kind_mismatch,
  index_out_of_range,
  quadrature_failure,
  too_few_samples,
  no_solution,
  parse_error,
};

/// Stable identifier string, e.g. "NonPositiveRate"; used in CLI diagnostics.
const char* error_code_name(ErrorCode code);

/// Library exception: a std::runtime_error with an attached ErrorCode.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of the numerical machinery (as opposed to bad inputs).
  bool numerical() const noexcept { return code_ == ErrorCode::quadrature_failure; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gpgame
