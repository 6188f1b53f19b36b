#include "evidence/frame.hpp"

#include <bit>
#include <unordered_set>

#include "evidence/error.hpp"

namespace evidence {

Frame Frame::make(std::vector<std::string> names) {
  if (names.empty()) throw Error(Errc::empty_frame, "frame needs at least one element");
  if (names.size() > kMaxFrameSize) {
    throw Error(Errc::frame_too_large, "frame has " + std::to_string(names.size()) +
                                           " elements; at most " + std::to_string(kMaxFrameSize) +
                                           " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) throw Error(Errc::empty_name, "frame element names must be non-empty");
    // These would make the '|'-joined encoding or the CSV rows ambiguous.
    if (name == "{}" || name.find_first_of("|,\"\r\n") != std::string::npos) {
      throw Error(Errc::invalid_name, "frame element name '" + name + "' is not encodable");
    }
    if (!seen.insert(name).second) {
      throw Error(Errc::duplicate_name, "duplicate frame element '" + name + "'");
    }
  }
  return Frame(std::make_shared<const Impl>(Impl{std::move(names)}));
}

std::optional<std::size_t> Frame::index_of(std::string_view name) const {
  const auto& names = impl_->names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

bool operator==(const Frame& a, const Frame& b) {
  return a.impl_ == b.impl_ || a.impl_->names == b.impl_->names;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) throw Error(Errc::frame_mismatch, "subsets belong to different frames");
}

FrameSubset::FrameSubset(Frame frame, Mask bits) : frame_(std::move(frame)), bits_(bits) {
  if ((bits_ & ~frame_.full_mask()) != 0) {
    throw Error(Errc::bits_outside_frame, "bit pattern has members outside the frame");
  }
}

FrameSubset FrameSubset::singleton(const Frame& frame, std::size_t index) {
  if (index >= frame.size()) throw Error(Errc::out_of_range, "element index outside the frame");
  return {frame, Mask{1} << index};
}

FrameSubset FrameSubset::from_names(const Frame& frame, const std::vector<std::string>& names) {
  Mask bits = 0;
  for (const auto& name : names) {
    auto idx = frame.index_of(name);
    if (!idx) throw Error(Errc::unknown_name, "'" + name + "' is not an element of the frame");
    bits |= Mask{1} << *idx;
  }
  return {frame, bits};
}

FrameSubset FrameSubset::decode(const Frame& frame, std::string_view text) {
  if (text == "{}") return empty(frame);
  if (text.empty()) throw Error(Errc::parse_error, "empty subset encoding (use \"{}\")");
  Mask bits = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    std::string_view part = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
    if (part.empty()) {
      throw Error(Errc::parse_error, "empty member in subset encoding '" + std::string(text) + "'");
    }
    auto idx = frame.index_of(part);
    if (!idx) {
      throw Error(Errc::unknown_name, "'" + std::string(part) + "' is not an element of the frame");
    }
    bits |= Mask{1} << *idx;
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return {frame, bits};
}

std::size_t FrameSubset::cardinality() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::string> FrameSubset::names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (contains(i)) out.push_back(frame_.name(i));
  }
  return out;
}

std::string encode_mask(const Frame& frame, Mask bits) {
  if (bits == 0) return "{}";
  std::string out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if ((bits >> i) & 1U) {
      if (!out.empty()) out += '|';
      out += frame.name(i);
    }
  }
  return out;
}

std::string FrameSubset::encode() const { return encode_mask(frame_, bits_); }

void FrameSubset::require_same_frame(const FrameSubset& other) const {
  evidence::require_same_frame(frame_, other.frame_);
}

FrameSubset FrameSubset::intersect(const FrameSubset& other) const {
  require_same_frame(other);
  return {frame_, bits_ & other.bits_};
}

FrameSubset FrameSubset::unite(const FrameSubset& other) const {
  require_same_frame(other);
  return {frame_, bits_ | other.bits_};
}

FrameSubset FrameSubset::minus(const FrameSubset& other) const {
  require_same_frame(other);
  return {frame_, bits_ & ~other.bits_};
}

bool FrameSubset::is_subset_of(const FrameSubset& other) const {
  require_same_frame(other);
  return (bits_ & ~other.bits_) == 0;
}

std::vector<FrameSubset> subsets_of(const FrameSubset& a) {
  std::vector<FrameSubset> out;
  out.reserve(std::size_t{1} << a.cardinality());
  for (Mask s : submasks(a.bits())) out.emplace_back(a.frame(), s);
  return out;
}

}  // namespace evidence
