#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/mass.hpp"
#include "evidence/rational.hpp"

namespace evidence {

/// One measured object. `response` is the set of elements v for which the
/// measurement of {v} succeeds; `label` is the object's label (the whole frame
/// for an unlabeled object).
class PopulationRecord {
 public:
  /// Throws Error{invalid_record} when the response is empty or misses the
  /// label, Error{frame_mismatch} when the two sets use different frames.
  PopulationRecord(std::string object_id, FrameSubset response, FrameSubset label);

  /// Unlabeled record (label = whole frame).
  PopulationRecord(std::string object_id, FrameSubset response);

  const std::string& object_id() const { return object_id_; }
  const FrameSubset& response() const { return response_; }
  const FrameSubset& label() const { return label_; }
  const Frame& frame() const { return response_.frame(); }

  bool operator==(const PopulationRecord&) const = default;

 private:
  std::string object_id_;
  FrameSubset response_;
  FrameSubset label_;
};

/// Ordered records over a single frame with unique ids. May be empty (a
/// relabeling can discard everything); the estimators reject empty input.
class Population {
 public:
  /// Throws Error{frame_mismatch | duplicate_id}.
  Population(Frame frame, std::vector<PopulationRecord> records);

  const Frame& frame() const { return frame_; }
  const std::vector<PopulationRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  bool operator==(const Population&) const = default;

 private:
  Frame frame_;
  std::vector<PopulationRecord> records_;
};

/// M(O, A): true iff the response meets A.
bool measure(const PopulationRecord& r, const FrameSubset& a);

/// Modified measurement M_l(O, A) = M(O, A n l(O)).
bool measure_labeled(const PopulationRecord& r, const FrameSubset& a);

/// response n label; never empty for a valid record.
FrameSubset effective_response(const PopulationRecord& r);

/// The disjunctive-normal-form term for A: every singleton of A measures true
/// under M_l and every singleton outside A measures false. Evaluated literally,
/// singleton by singleton.
bool expr_holds(const PopulationRecord& r, const FrameSubset& a);

/// Number of records per effective response.
std::map<Mask, std::uint64_t> class_counts(const Population& p);

/// Relative class frequencies as a mass function (denominator |p|).
/// Throws Error{empty_population}.
MassFunction estimate_mass(const Population& p);

/// Fraction of records with M_l(w, complement A) false.
Rational estimate_belief_direct(const Population& p, const FrameSubset& a);

/// Fraction of records with M_l(w, A) true.
Rational estimate_plausibility_direct(const Population& p, const FrameSubset& a);

/// Count-level belief for every subset: entry A is the number of records whose
/// effective response lies inside A. Integer zeta transform of class_counts.
std::vector<std::uint64_t> belief_counts(const Population& p);

/// Full truth table of M(O, .) for one object, indexed by bit pattern.
struct MeasurementTable {
  Frame frame;
  std::vector<bool> truth;

  /// Table induced by a response set: t[A] = (A n R nonempty).
  static MeasurementTable from_response(const FrameSubset& response);
};

struct AxiomReport {
  bool frame_true = true;            // t[frame] holds
  bool superset_consistent = true;   // t[A], A c B  =>  t[B]
  bool subset_consistent = true;     // t[A], |A| >= 2  =>  t[B] for some proper B c A
  bool singleton_determined = true;  // t[A]  <=>  t[{v}] for some v in A
  std::vector<std::string> violations;

  bool ok() const {
    return frame_true && superset_consistent && subset_consistent && singleton_determined;
  }
};

/// Tables up to this frame size are accepted by validate_axioms.
inline constexpr std::size_t kMaxAxiomFrame = 12;

/// Throws Error{dense_too_large} beyond kMaxAxiomFrame and Error{out_of_range}
/// when the table does not have 2^n entries.
AxiomReport validate_axioms(const MeasurementTable& table);

enum class SynthesisMode { exact, sampled };

/// Builds an unlabeled population whose class frequencies follow `m`.
/// exact: largest-remainder apportionment of size * m(A), ties broken by
/// canonical encoding order; records grouped by class in that order.
/// sampled: each record's response drawn independently from m with the
/// counter-based stream (seed, record index).
/// Throws Error{zero_size}.
Population synthesize_population(const MassFunction& m, std::size_t size, SynthesisMode mode,
                                 std::uint64_t seed = 0);

}  // namespace evidence
