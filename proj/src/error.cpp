#include "evidence/error.hpp"

namespace evidence {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::empty_frame: return "empty_frame";
    case Errc::duplicate_name: return "duplicate_name";
    case Errc::empty_name: return "empty_name";
    case Errc::invalid_name: return "invalid_name";
    case Errc::frame_too_large: return "frame_too_large";
    case Errc::unknown_name: return "unknown_name";
    case Errc::frame_mismatch: return "frame_mismatch";
    case Errc::bits_outside_frame: return "bits_outside_frame";
    case Errc::nonpositive_weight: return "nonpositive_weight";
    case Errc::mass_on_empty_set: return "mass_on_empty_set";
    case Errc::mass_sum_not_one: return "mass_sum_not_one";
    case Errc::empty_label: return "empty_label";
    case Errc::total_conflict: return "total_conflict";
    case Errc::dense_too_large: return "dense_too_large";
    case Errc::not_a_belief_function: return "not_a_belief_function";
    case Errc::empty_population: return "empty_population";
    case Errc::invalid_record: return "invalid_record";
    case Errc::duplicate_id: return "duplicate_id";
    case Errc::invalid_spec: return "invalid_spec";
    case Errc::zero_size: return "zero_size";
    case Errc::all_trials_empty: return "all_trials_empty";
    case Errc::parse_error: return "parse_error";
    case Errc::out_of_range: return "out_of_range";
  }
  return "unknown";
}

}  // namespace evidence
