#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/rational.hpp"

namespace evidence {

/// Dense belief tables are only built for frames up to this size.
inline constexpr std::size_t kMaxDenseFrame = 20;

/// Basic belief assignment over a frame. Focal sets are stored sparsely by
/// bit pattern; every stored weight is positive, the empty set never carries
/// mass and the weights sum to exactly one. Invalid input is rejected, never
/// renormalized.
class MassFunction {
 public:
  using Weights = std::map<Mask, Rational>;

  /// Validates and builds. Zero weights are dropped; repeated subsets are
  /// summed. Throws Error{nonpositive_weight | mass_on_empty_set |
  /// mass_sum_not_one | frame_mismatch | bits_outside_frame}.
  static MassFunction make(const Frame& frame,
                           const std::vector<std::pair<FrameSubset, Rational>>& entries);
  static MassFunction make(const Frame& frame, const Weights& weights);

  static MassFunction vacuous(const Frame& frame);

  /// Mass one on `focus`. Throws Error{empty_label} when `focus` is empty.
  static MassFunction categorical(const FrameSubset& focus);

  const Frame& frame() const { return frame_; }
  const Weights& weights() const { return weights_; }
  std::size_t focal_count() const { return weights_.size(); }

  /// Zero for non-focal subsets.
  Rational weight(const FrameSubset& subset) const;
  Rational weight(Mask bits) const;

  std::vector<FrameSubset> focal_sets() const;

  friend bool operator==(const MassFunction& a, const MassFunction& b) {
    return a.frame_ == b.frame_ && a.weights_ == b.weights_;
  }

 private:
  MassFunction(Frame frame, Weights weights)
      : frame_(std::move(frame)), weights_(std::move(weights)) {}

  Frame frame_;
  Weights weights_;
};

/// Bel(A): sum of m(B) over focal B contained in A.
Rational belief(const MassFunction& m, const FrameSubset& a);

/// Pl(A) = 1 - Bel(complement A). Also evaluates the sum of m(B) over focal
/// B meeting A and throws std::logic_error if the two routes ever disagree.
Rational plausibility(const MassFunction& m, const FrameSubset& a);

/// Pl(A) as the sum of m(B) over focal B with B n A nonempty.
Rational plausibility_by_intersection(const MassFunction& m, const FrameSubset& a);

/// Dense table of set-function values indexed by bit pattern.
class BeliefTable {
 public:
  /// Takes 2^n values. Throws Error{dense_too_large} for n > kMaxDenseFrame
  /// and Error{out_of_range} on a size mismatch.
  BeliefTable(Frame frame, std::vector<Rational> values);

  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(Mask bits) const { return values_.at(bits); }
  const Rational& at(const FrameSubset& subset) const;

 private:
  Frame frame_;
  std::vector<Rational> values_;
};

/// Zeta transform over the subset lattice, O(n 2^n) additions.
/// Throws Error{dense_too_large} beyond kMaxDenseFrame.
BeliefTable belief_table(const MassFunction& m);

/// Möbius inversion of a belief table. Throws Error{not_a_belief_function}
/// when the inversion yields a negative weight, mass on the empty set or a
/// total other than one.
MassFunction mass_from_belief(const BeliefTable& table);

struct Combination {
  MassFunction mass;
  Rational conflict;
};

/// Dempster's rule. Returns the normalized combination together with the
/// conflict K (mass of empty intersections). Throws Error{total_conflict}
/// when K = 1 and Error{frame_mismatch} across frames.
Combination dempster_combine(const MassFunction& m1, const MassFunction& m2);

}  // namespace evidence
