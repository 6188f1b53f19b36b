#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/mass.hpp"
#include "evidence/population.hpp"
#include "evidence/rational.hpp"

namespace evidence {

/// Label sets L1..Lk with their selection probabilities. Stored as a mass
/// function; labels() is the ordered (by bit pattern) view of its focal sets.
class LabelingProcessSpec {
 public:
  /// Throws Error{invalid_spec} on empty input, size mismatch, empty or
  /// repeated labels, nonpositive probabilities or a total other than one.
  static LabelingProcessSpec make(const std::vector<FrameSubset>& labels,
                                  const std::vector<Rational>& probs);
  static LabelingProcessSpec from_mass(const MassFunction& m);
  static LabelingProcessSpec point(const FrameSubset& label);

  const Frame& frame() const { return mass_.frame(); }
  const MassFunction& as_mass() const { return mass_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<FrameSubset>& labels() const { return labels_; }
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  explicit LabelingProcessSpec(MassFunction mass);

  MassFunction mass_;
  std::vector<FrameSubset> labels_;
  std::vector<Rational> probs_;
};

struct RelabelOutcome {
  Population population;
  std::size_t discarded = 0;

  std::size_t survivors() const { return population.size(); }
  /// discarded / (survivors + discarded); zero for an empty input.
  Rational discard_fraction() const;
};

/// Discards records with M_l(w, L) false and intersects the remaining labels
/// with L, preserving order. Throws Error{empty_label | frame_mismatch}.
RelabelOutcome simple_relabel(const Population& p, const FrameSubset& label);

/// For every record independently draws a label from `spec` using the stream
/// (seed, record index), then applies the simple rule with it. `threads` > 1
/// partitions the records; the result does not depend on it.
RelabelOutcome general_relabel(const Population& p, const LabelingProcessSpec& spec,
                               std::uint64_t seed, unsigned threads = 1);

/// Closed-form expected fraction of records ending in each class D (the empty
/// class collects expected discards): sum over C n G = D of m(C) * spec(G),
/// with m the estimated mass of `p`. Throws Error{empty_population}.
std::map<Mask, Rational> expected_class_weights(const Population& p,
                                                const LabelingProcessSpec& spec);

}  // namespace evidence
