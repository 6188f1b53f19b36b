#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/labeling.hpp"
#include "evidence/mass.hpp"
#include "evidence/population.hpp"
#include "evidence/rational.hpp"

namespace evidence {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

class VerificationReport {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  /// Records PASS when lhs == rhs and FAIL (with both values) otherwise.
  void expect_equal(std::string name, const Rational& lhs, const Rational& rhs,
                    std::string detail = {});
  void skip(std::string name, std::string detail);
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  bool overall() const;
  std::size_t count(CheckStatus status) const;

  std::string to_json() const;
  /// Fixed-width table, one line per check, followed by a summary line.
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

// Citizen Coot fixture ----------------------------------------------------

/// HB HG MB MG SB SG DB DG: quality {High, Moderate, Substandard, Defective}
/// crossed with shop {Good, Bad}.
Frame coot_frame();

/// Label believing only high and moderate quality goes to good shops:
/// {HB, HG, MB, MG, SB, DB}.
FrameSubset coot_label();

struct CootRow {
  std::vector<std::string> members;
  std::int64_t mass_count;     // numerator over 717
  std::int64_t printed_belief; // belief numerator as printed in the source table
};

/// The 16 classes of the labeled Coot population, in table order.
const std::vector<CootRow>& coot_rows();

inline constexpr std::int64_t kCootSize = 717;

/// 717 labeled records reproducing the table's class counts; every label is
/// coot_label() and every response equals its class.
Population coot_fixture();

/// Unlabeled 717-record population over the Coot frame. Some of its classes
/// lie inside coot_label(), some straddle it and some miss it entirely.
Population coot_standin();

/// Checks the labeled fixture's mass column and belief column against the
/// table. Rows whose printed belief disagrees with the subset sum are checked
/// against the subset sum and the printed value is reported in the detail.
VerificationReport verify_coot_table();

// Theorem checks -------------------------------------------------------------

using MassEstimator = std::function<MassFunction(const Population&)>;

/// Normalization, empty-set mass, direct belief == subset sum of the
/// estimated mass, and direct plausibility == 1 - Bel(complement), all exact
/// and exhaustive up to kMaxAxiomFrame elements (SKIPPED beyond).
/// `estimator` replaces estimate_mass (for harness self-tests).
VerificationReport verify_mte_axioms(const Population& p, const MassEstimator& estimator = {});

/// Estimated mass after simple_relabel(p, L) against estimate_mass(p)
/// combined with the categorical mass on L. An empty relabeled population
/// matched by a total-conflict combination passes.
VerificationReport verify_simple_relabel(const Population& p, const FrameSubset& label);

struct MonteCarloOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  Rational tolerance = Rational(1, 100);
  unsigned threads = 1;
};

/// EXACT: expected_class_weights renormalized over nonempty classes equals
/// the Dempster combination of estimate_mass(p) with the spec.
/// MONTE CARLO: mean direct belief over seeded trials stays within the
/// tolerance of the combined belief for every subset. Trials that discard
/// every record are excluded and counted; throws Error{all_trials_empty} when
/// nothing is left.
VerificationReport verify_general_relabel(const Population& p, const LabelingProcessSpec& spec,
                                          const MonteCarloOptions& options);

/// Exact mean over trials of the per-subset estimated belief, together with
/// the number of trials that produced an empty population.
struct MonteCarloMean {
  std::vector<Rational> mean_belief;  // indexed by bit pattern
  std::size_t used_trials = 0;
  std::size_t empty_trials = 0;
};

MonteCarloMean monte_carlo_belief(const Population& p, const LabelingProcessSpec& spec,
                                  std::size_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace evidence
