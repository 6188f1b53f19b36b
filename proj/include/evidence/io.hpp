#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "evidence/frame.hpp"
#include "evidence/labeling.hpp"
#include "evidence/mass.hpp"
#include "evidence/population.hpp"

namespace evidence::io {

/// Mass document: {"frame": [...], "focal": [{"set", "num", "den"}, ...]}
/// with focal entries sorted by canonical encoding. Output is canonical
/// (two-space indent, trailing newline), so save(load(save(m))) is byte-exact.
std::string mass_to_json(const MassFunction& m);

/// Re-validates every mass invariant. Throws Error{parse_error} on malformed
/// documents and the usual validation errors otherwise.
MassFunction mass_from_json(std::string_view text);

/// Belief and plausibility of every subset (frames up to 12 elements).
std::string tables_to_json(const MassFunction& m);

/// Population CSV. The first line "#frame=a|b|c" pins the frame, followed by
/// the header "object_id,response,label". An empty label means the whole
/// frame; the writer emits it empty in that case.
std::string population_to_csv(const Population& p);

/// `frame_override` wins over the "#frame=" line. Without either, the frame
/// is the response/label names in order of first appearance. Throws
/// Error{parse_error} with the line number on malformed rows and on records
/// that break a population invariant.
Population population_from_csv(std::string_view text,
                               const std::optional<Frame>& frame_override = std::nullopt);

/// {"survivors", "discarded", "conflict_num", "conflict_den"}.
std::string relabel_report_json(const RelabelOutcome& outcome);

/// {"mass": <mass document>, "conflict_num", "conflict_den"}.
std::string combination_report_json(const Combination& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace evidence::io
