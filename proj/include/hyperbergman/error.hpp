#pragma once

#include <stdexcept>
#include <string>

namespace hb {

enum class ErrorCode {
  unsupported_dimension = 1,
  dimension_mismatch,
  division_by_zero,
  singular_point,
  outside_domain,
  out_of_half_space,
  out_of_ball,
  point_on_boundary,
  invalid_parameter,
  invalid_spec,
  non_finite_sample,
  unknown_scenario,
  io_failure,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a status value without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hb
