#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evidence {

/// Error categories raised by the library. Each violated contract maps to one
/// code so callers (and tests) can tell validation failures apart.
enum class Errc {
  empty_frame,
  duplicate_name,
  empty_name,
  invalid_name,
  frame_too_large,
  unknown_name,
  frame_mismatch,
  bits_outside_frame,
  nonpositive_weight,
  mass_on_empty_set,
  mass_sum_not_one,
  empty_label,
  total_conflict,
  dense_too_large,
  not_a_belief_function,
  empty_population,
  invalid_record,
  duplicate_id,
  invalid_spec,
  zero_size,
  all_trials_empty,
  parse_error,
  out_of_range,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace evidence
