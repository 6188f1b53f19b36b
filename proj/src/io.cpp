#include "evidence/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "evidence/error.hpp"

namespace evidence::io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rational_entry(const std::string& set, const Rational& value) {
  ordered_json entry;
  entry["set"] = set;
  entry["num"] = value.numerator_int64();
  entry["den"] = value.denominator_int64();
  return entry;
}

ordered_json frame_json(const Frame& frame) {
  ordered_json names = ordered_json::array();
  for (const auto& n : frame.names()) names.push_back(n);
  return names;
}

ordered_json mass_document(const MassFunction& m) {
  std::vector<std::pair<std::string, Rational>> focal;
  for (const auto& [bits, w] : m.weights()) focal.emplace_back(encode_mask(m.frame(), bits), w);
  std::sort(focal.begin(), focal.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ordered_json doc;
  doc["frame"] = frame_json(m.frame());
  doc["focal"] = ordered_json::array();
  for (const auto& [set, w] : focal) doc["focal"].push_back(rational_entry(set, w));
  return doc;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::parse_error, "mass document: " + what);
}

std::int64_t integer_field(const nlohmann::json& entry, const char* key, std::size_t index) {
  auto it = entry.find(key);
  if (it == entry.end() || !it->is_number_integer()) {
    malformed("focal entry " + std::to_string(index) + " needs an integer '" + key + "'");
  }
  return it->get<std::int64_t>();
}

}  // namespace

std::string mass_to_json(const MassFunction& m) { return mass_document(m).dump(2) + "\n"; }

MassFunction mass_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  if (!doc.contains("frame") || !doc["frame"].is_array()) malformed("missing 'frame' array");
  if (!doc.contains("focal") || !doc["focal"].is_array()) malformed("missing 'focal' array");

  std::vector<std::string> names;
  for (const auto& n : doc["frame"]) {
    if (!n.is_string()) malformed("frame names must be strings");
    names.push_back(n.get<std::string>());
  }
  const Frame frame = Frame::make(std::move(names));

  std::vector<std::pair<FrameSubset, Rational>> entries;
  std::unordered_set<Mask> seen;
  std::size_t index = 0;
  for (const auto& entry : doc["focal"]) {
    if (!entry.is_object() || !entry.contains("set") || !entry["set"].is_string()) {
      malformed("focal entry " + std::to_string(index) + " needs a string 'set'");
    }
    const FrameSubset set = FrameSubset::decode(frame, entry["set"].get<std::string>());
    const std::int64_t num = integer_field(entry, "num", index);
    const std::int64_t den = integer_field(entry, "den", index);
    if (den <= 0) malformed("focal entry " + std::to_string(index) + " has a nonpositive 'den'");
    const Rational w(num, den);
    if (w.sign() <= 0) {
      throw Error(Errc::nonpositive_weight, "mass " + w.str() + " on " + set.encode() +
                                                " must be positive");
    }
    if (!seen.insert(set.bits()).second) malformed("focal set " + set.encode() + " listed twice");
    entries.emplace_back(set, w);
    ++index;
  }
  return MassFunction::make(frame, entries);
}

std::string tables_to_json(const MassFunction& m) {
  const Frame& frame = m.frame();
  if (frame.size() > 12) {
    throw Error(Errc::dense_too_large, "belief/plausibility tables are limited to 12 elements");
  }
  const BeliefTable bel = belief_table(m);
  ordered_json doc;
  doc["frame"] = frame_json(frame);
  doc["belief"] = ordered_json::array();
  doc["plausibility"] = ordered_json::array();
  const Mask full = frame.full_mask();
  for (Mask a = 0; a <= full; ++a) {
    const std::string set = encode_mask(frame, a);
    doc["belief"].push_back(rational_entry(set, bel.at(a)));
    doc["plausibility"].push_back(rational_entry(set, Rational(1) - bel.at(full & ~a)));
  }
  return doc.dump(2) + "\n";
}

std::string population_to_csv(const Population& p) {
  const Frame& frame = p.frame();
  std::string out = "#frame=";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i) out += '|';
    out += frame.name(i);
  }
  out += "\nobject_id,response,label\n";
  const Mask full = frame.full_mask();
  for (const auto& r : p.records()) {
    out += r.object_id();
    out += ',';
    out += r.response().encode();
    out += ',';
    if (r.label().bits() != full) out += r.label().encode();
    out += '\n';
  }
  return out;
}

namespace {

struct RawRow {
  std::size_t line;
  std::string id, response, label;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Population population_from_csv(std::string_view text, const std::optional<Frame>& frame_override) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }

  std::size_t cursor = 0;
  std::optional<Frame> frame = frame_override;
  if (cursor < lines.size() && lines[cursor].starts_with("#frame=")) {
    if (!frame) {
      std::vector<std::string> names;
      for (auto part : split(lines[cursor].substr(7), '|')) names.emplace_back(part);
      try {
        frame = Frame::make(std::move(names));
      } catch (const Error& e) {
        bad_line(cursor + 1, e.what());
      }
    }
    ++cursor;
  }
  if (cursor >= lines.size() || lines[cursor] != "object_id,response,label") {
    bad_line(cursor + 1, "expected header 'object_id,response,label'");
  }
  ++cursor;

  std::vector<RawRow> rows;
  for (; cursor < lines.size(); ++cursor) {
    const std::size_t line_no = cursor + 1;
    auto fields = split(lines[cursor], ',');
    if (fields.size() != 3) {
      bad_line(line_no, "expected 3 fields, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) bad_line(line_no, "empty object_id");
    if (fields[1].empty()) bad_line(line_no, "empty response");
    rows.push_back(RawRow{line_no, std::string(fields[0]), std::string(fields[1]),
                          std::string(fields[2])});
  }

  if (!frame) {
    // Infer the frame from first appearances.
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    auto collect = [&](const std::string& field, std::size_t line_no) {
      if (field.empty() || field == "{}") return;
      for (auto part : split(field, '|')) {
        if (part.empty()) bad_line(line_no, "empty member in '" + field + "'");
        if (seen.emplace(part).second) names.emplace_back(part);
      }
    };
    for (const auto& row : rows) {
      collect(row.response, row.line);
      collect(row.label, row.line);
    }
    if (names.empty()) throw Error(Errc::parse_error, "cannot infer a frame from an empty file");
    try {
      frame = Frame::make(std::move(names));
    } catch (const Error& e) {
      throw Error(Errc::parse_error, std::string("inferred frame: ") + e.what());
    }
  }

  std::vector<PopulationRecord> records;
  records.reserve(rows.size());
  std::unordered_set<std::string> ids;
  for (const auto& row : rows) {
    try {
      const FrameSubset response = FrameSubset::decode(*frame, row.response);
      const FrameSubset label =
          row.label.empty() ? FrameSubset::full(*frame) : FrameSubset::decode(*frame, row.label);
      if (!ids.insert(row.id).second) bad_line(row.line, "duplicate object id '" + row.id + "'");
      records.emplace_back(row.id, response, label);
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error && std::string_view(e.what()).starts_with("line ")) throw;
      bad_line(row.line, e.what());
    }
  }
  return Population(*frame, std::move(records));
}

std::string relabel_report_json(const RelabelOutcome& outcome) {
  const Rational conflict = outcome.discard_fraction();
  ordered_json doc;
  doc["survivors"] = outcome.survivors();
  doc["discarded"] = outcome.discarded;
  doc["conflict_num"] = conflict.numerator_int64();
  doc["conflict_den"] = conflict.denominator_int64();
  return doc.dump(2) + "\n";
}

std::string combination_report_json(const Combination& c) {
  ordered_json doc;
  doc["mass"] = mass_document(c.mass);
  doc["conflict_num"] = c.conflict.numerator_int64();
  doc["conflict_den"] = c.conflict.denominator_int64();
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::parse_error, "failed writing '" + path + "'");
}

}  // namespace evidence::io
