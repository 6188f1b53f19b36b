#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evidence {

/// Membership bit pattern of a subset; bit i stands for element i of a frame.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxFrameSize = 30;

/// Frame of discernment: an ordered, immutable list of distinct element names.
/// Copies share storage. Two frames compare equal when their element
/// sequences are equal, so a frame rebuilt from a file is combinable with
/// the original.
class Frame {
 public:
  /// Throws Error{empty_frame | empty_name | invalid_name | duplicate_name |
  /// frame_too_large}. Names may not contain '|', ',', quotes or line breaks.
  static Frame make(std::vector<std::string> names);

  std::size_t size() const { return impl_->names.size(); }
  const std::vector<std::string>& names() const { return impl_->names; }
  const std::string& name(std::size_t i) const { return impl_->names[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Mask full_mask() const {
    return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1);
  }
  /// Number of subsets, 2^n.
  std::uint64_t powerset_size() const { return std::uint64_t{1} << size(); }

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  struct Impl {
    std::vector<std::string> names;
  };
  explicit Frame(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

class FrameSubset {
 public:
  /// Throws Error{bits_outside_frame} when a bit at position >= n is set.
  FrameSubset(Frame frame, Mask bits);

  static FrameSubset empty(const Frame& frame) { return {frame, 0}; }
  static FrameSubset full(const Frame& frame) { return {frame, frame.full_mask()}; }
  static FrameSubset singleton(const Frame& frame, std::size_t index);

  /// Throws Error{unknown_name}.
  static FrameSubset from_names(const Frame& frame, const std::vector<std::string>& names);

  /// Parses the canonical encoding: member names joined by '|', or "{}".
  /// Members may appear in any order; throws Error{parse_error | unknown_name}.
  static FrameSubset decode(const Frame& frame, std::string_view text);

  const Frame& frame() const { return frame_; }
  Mask bits() const { return bits_; }

  std::size_t cardinality() const;
  bool is_empty() const { return bits_ == 0; }
  bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }

  /// Member names in frame order.
  std::vector<std::string> names() const;

  /// Canonical text form: names in frame order joined by '|'; "{}" when empty.
  std::string encode() const;

  // All binary operations throw Error{frame_mismatch} across frames.
  FrameSubset intersect(const FrameSubset& other) const;
  FrameSubset unite(const FrameSubset& other) const;
  FrameSubset minus(const FrameSubset& other) const;
  FrameSubset complement() const { return {frame_, frame_.full_mask() & ~bits_}; }
  bool is_subset_of(const FrameSubset& other) const;
  bool intersects(const FrameSubset& other) const { return !intersect(other).is_empty(); }

  friend bool operator==(const FrameSubset& a, const FrameSubset& b) {
    return a.bits_ == b.bits_ && a.frame_ == b.frame_;
  }
  /// Orders by bit pattern; only meaningful within one frame.
  friend std::strong_ordering operator<=>(const FrameSubset& a, const FrameSubset& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  void require_same_frame(const FrameSubset& other) const;

  Frame frame_;
  Mask bits_;
};

/// Throws Error{frame_mismatch} unless the frames are equal.
void require_same_frame(const Frame& a, const Frame& b);

std::string encode_mask(const Frame& frame, Mask bits);

/// Range over all subsets of a bit pattern in ascending numeric order,
/// starting at 0 and ending at the pattern itself.
class SubmaskRange {
 public:
  class iterator {
   public:
    using value_type = Mask;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(Mask super, Mask current, bool done)
        : super_(super), current_(current), done_(done) {}

    Mask operator*() const { return current_; }
    iterator& operator++() {
      if (current_ == super_) {
        done_ = true;
      } else {
        current_ = (current_ - super_) & super_;
      }
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    Mask super_ = 0;
    Mask current_ = 0;
    bool done_ = true;
  };

  explicit SubmaskRange(Mask super) : super_(super) {}
  iterator begin() const { return {super_, 0, false}; }
  iterator end() const { return {super_, 0, true}; }

 private:
  Mask super_;
};

inline SubmaskRange submasks(Mask super) { return SubmaskRange{super}; }

/// Every subset of `a`, each exactly once, in ascending bit-pattern order.
std::vector<FrameSubset> subsets_of(const FrameSubset& a);

}  // namespace evidence
