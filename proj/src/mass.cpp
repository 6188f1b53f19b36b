#include "evidence/mass.hpp"

#include <stdexcept>

#include "evidence/error.hpp"

namespace evidence {

MassFunction MassFunction::make(const Frame& frame, const Weights& weights) {
  Weights kept;
  Rational total = 0;
  for (const auto& [bits, w] : weights) {
    if ((bits & ~frame.full_mask()) != 0) {
      throw Error(Errc::bits_outside_frame, "focal set has members outside the frame");
    }
    if (w.sign() < 0) {
      throw Error(Errc::nonpositive_weight,
                  "negative mass " + w.str() + " on " + encode_mask(frame, bits));
    }
    if (w.is_zero()) continue;
    if (bits == 0) throw Error(Errc::mass_on_empty_set, "mass " + w.str() + " on the empty set");
    kept.emplace(bits, w);
    total += w;
  }
  if (total != Rational(1)) {
    throw Error(Errc::mass_sum_not_one, "masses sum to " + total.str() + ", not 1");
  }
  return MassFunction(frame, std::move(kept));
}

MassFunction MassFunction::make(const Frame& frame,
                                const std::vector<std::pair<FrameSubset, Rational>>& entries) {
  Weights merged;
  for (const auto& [subset, w] : entries) {
    require_same_frame(frame, subset.frame());
    if (w.sign() < 0) {
      throw Error(Errc::nonpositive_weight, "negative mass " + w.str() + " on " + subset.encode());
    }
    merged[subset.bits()] += w;
  }
  return make(frame, merged);
}

MassFunction MassFunction::vacuous(const Frame& frame) {
  return MassFunction(frame, Weights{{frame.full_mask(), Rational(1)}});
}

MassFunction MassFunction::categorical(const FrameSubset& focus) {
  if (focus.is_empty()) throw Error(Errc::empty_label, "categorical mass needs a nonempty set");
  return MassFunction(focus.frame(), Weights{{focus.bits(), Rational(1)}});
}

Rational MassFunction::weight(Mask bits) const {
  auto it = weights_.find(bits);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational MassFunction::weight(const FrameSubset& subset) const {
  require_same_frame(frame_, subset.frame());
  return weight(subset.bits());
}

std::vector<FrameSubset> MassFunction::focal_sets() const {
  std::vector<FrameSubset> out;
  out.reserve(weights_.size());
  for (const auto& [bits, w] : weights_) out.emplace_back(frame_, bits);
  return out;
}

Rational belief(const MassFunction& m, const FrameSubset& a) {
  require_same_frame(m.frame(), a.frame());
  Rational sum = 0;
  for (const auto& [bits, w] : m.weights()) {
    if ((bits & ~a.bits()) == 0) sum += w;
  }
  return sum;
}

Rational plausibility_by_intersection(const MassFunction& m, const FrameSubset& a) {
  require_same_frame(m.frame(), a.frame());
  Rational sum = 0;
  for (const auto& [bits, w] : m.weights()) {
    if ((bits & a.bits()) != 0) sum += w;
  }
  return sum;
}

Rational plausibility(const MassFunction& m, const FrameSubset& a) {
  Rational dual = Rational(1) - belief(m, a.complement());
  if (dual != plausibility_by_intersection(m, a)) {
    throw std::logic_error("plausibility routes disagree on " + a.encode());
  }
  return dual;
}

BeliefTable::BeliefTable(Frame frame, std::vector<Rational> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  if (frame_.size() > kMaxDenseFrame) {
    throw Error(Errc::dense_too_large, "dense tables are limited to " +
                                           std::to_string(kMaxDenseFrame) + " elements");
  }
  if (values_.size() != frame_.powerset_size()) {
    throw Error(Errc::out_of_range, "belief table needs one value per subset");
  }
}

const Rational& BeliefTable::at(const FrameSubset& subset) const {
  require_same_frame(frame_, subset.frame());
  return values_[subset.bits()];
}

BeliefTable belief_table(const MassFunction& m) {
  const Frame& frame = m.frame();
  if (frame.size() > kMaxDenseFrame) {
    throw Error(Errc::dense_too_large, "dense tables are limited to " +
                                           std::to_string(kMaxDenseFrame) + " elements");
  }
  std::vector<Rational> values(frame.powerset_size());
  for (const auto& [bits, w] : m.weights()) values[bits] = w;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask s = 0; s < values.size(); ++s) {
      if (s & bit) values[s] += values[s ^ bit];
    }
  }
  return BeliefTable(frame, std::move(values));
}

MassFunction mass_from_belief(const BeliefTable& table) {
  const Frame& frame = table.frame();
  std::vector<Rational> values = table.values();
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask s = 0; s < values.size(); ++s) {
      if (s & bit) values[s] -= values[s ^ bit];
    }
  }
  if (!values[0].is_zero()) {
    throw Error(Errc::not_a_belief_function, "inversion puts mass " + values[0].str() +
                                                 " on the empty set");
  }
  MassFunction::Weights weights;
  Rational total = 0;
  for (Mask s = 1; s < values.size(); ++s) {
    if (values[s].sign() < 0) {
      throw Error(Errc::not_a_belief_function, "inversion yields negative mass " +
                                                   values[s].str() + " on " +
                                                   encode_mask(frame, s));
    }
    if (!values[s].is_zero()) {
      total += values[s];
      weights.emplace(s, values[s]);
    }
  }
  if (total != Rational(1)) {
    throw Error(Errc::not_a_belief_function, "inverted masses sum to " + total.str());
  }
  return MassFunction::make(frame, weights);
}

Combination dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  MassFunction::Weights joint;
  Rational conflict = 0;
  for (const auto& [c, wc] : m1.weights()) {
    for (const auto& [g, wg] : m2.weights()) {
      const Mask d = c & g;
      if (d == 0) {
        conflict += wc * wg;
      } else {
        joint[d] += wc * wg;
      }
    }
  }
  if (conflict == Rational(1)) {
    throw Error(Errc::total_conflict, "total conflict: every pair of focal sets is disjoint");
  }
  const Rational scale = Rational(1) / (Rational(1) - conflict);
  for (auto& [d, w] : joint) w *= scale;
  return Combination{MassFunction::make(m1.frame(), joint), conflict};
}

}  // namespace evidence
