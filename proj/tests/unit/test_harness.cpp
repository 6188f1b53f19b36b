#include "doctest.h"
#include "evidence/error.hpp"
#include "evidence/harness.hpp"
#include "support/generators.hpp"

using namespace evidence;

TEST_CASE("coot fixture") {
  const Population p = coot_fixture();
  CHECK(p.size() == 717);
  for (const auto& r : p.records()) {
    CHECK(r.response().intersects(r.label()));
    CHECK(r.label() == coot_label());
  }
  const auto m = estimate_mass(p);
  CHECK(m.focal_count() == 16);
  CHECK(m.weight(FrameSubset::from_names(coot_frame(), {"HB"})) == Rational(20, 717));
  CHECK(m.weight(FrameSubset::from_names(coot_frame(), {"HG"})) == Rational(112, 717));
  CHECK(m.weight(FrameSubset::from_names(coot_frame(), {"MB", "DB", "MG"})) == Rational(10, 717));
  CHECK(coot_fixture() == p);
  CHECK(p.records().front().object_id() == "coot-001");
  CHECK(p.records().back().object_id() == "coot-717");
}

TEST_CASE("coot stand-in") {
  const Population p = coot_standin();
  CHECK(p.size() == 717);
  std::size_t inside = 0, straddling = 0, outside = 0;
  for (const auto& [cls, n] : class_counts(p)) {
    const Mask label = coot_label().bits();
    if ((cls & ~label) == 0) {
      inside += n;
    } else if ((cls & label) == 0) {
      outside += n;
    } else {
      straddling += n;
    }
  }
  CHECK(inside > 0);
  CHECK(straddling > 0);
  CHECK(outside == 35);
}

TEST_CASE("coot table report") {
  const auto report = verify_coot_table();
  CHECK(report.overall());
  std::size_t flagged = 0;
  for (const auto& c : report.checks()) {
    if (c.detail.find("printed value") != std::string::npos) ++flagged;
  }
  CHECK(flagged == 4);
}

TEST_CASE("verify_mte_axioms") {
  CHECK(verify_mte_axioms(coot_fixture()).overall());
  CHECK(verify_mte_axioms(coot_standin()).overall());

  testing::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Frame f = testing::random_frame(rng, 1, 6);
    const auto m = testing::random_mass(rng, f);
    CHECK(verify_mte_axioms(synthesize_population(m, testing::uniform(rng, 1, 90), SynthesisMode::exact))
              .overall());
  }

  // An estimator that moves one record's worth of mass onto the frame.
  const MassEstimator tampered = [](const Population& p) {
    auto weights = estimate_mass(p).weights();
    const Rational unit(1, static_cast<std::int64_t>(p.size()));
    auto first = weights.begin();
    first->second -= unit;
    if (first->second.is_zero()) weights.erase(first);
    weights[p.frame().full_mask()] += unit;
    return MassFunction::make(p.frame(), weights);
  };
  const auto bad = verify_mte_axioms(coot_fixture(), tampered);
  CHECK_FALSE(bad.overall());
  bool saw_values = false;
  for (const auto& c : bad.checks()) {
    if (c.status == CheckStatus::fail) saw_values = !c.lhs.empty() && !c.rhs.empty() && c.lhs != c.rhs;
  }
  CHECK(saw_values);

  CHECK_THROWS_AS(verify_mte_axioms(Population(coot_frame(), {})), Error);
}

TEST_CASE("verify_simple_relabel") {
  CHECK(verify_simple_relabel(coot_standin(), coot_label()).overall());
  CHECK(verify_simple_relabel(coot_standin(), FrameSubset::full(coot_frame())).overall());

  const Frame f = Frame::make({"a", "b"});
  const Population only_a(f, {PopulationRecord("x", FrameSubset::from_names(f, {"a"}))});
  const auto degenerate = verify_simple_relabel(only_a, FrameSubset::from_names(f, {"b"}));
  CHECK(degenerate.overall());
  CHECK(degenerate.checks().front().detail == "matched degenerate outcome");

  CHECK_THROWS_AS(verify_simple_relabel(only_a, FrameSubset::empty(f)), Error);
}

TEST_CASE("verify_general_relabel") {
  const Population p = coot_standin();
  MonteCarloOptions exact{50, 3, Rational(0), 1};
  CHECK(verify_general_relabel(p, LabelingProcessSpec::point(FrameSubset::full(coot_frame())), exact)
            .overall());

  // A single label makes every trial identical to the simple process.
  const auto point = LabelingProcessSpec::point(coot_label());
  const auto mc = monte_carlo_belief(p, point, 20, 5);
  const auto simple = belief_counts(simple_relabel(p, coot_label()).population);
  const auto survivors = static_cast<std::int64_t>(simple_relabel(p, coot_label()).survivors());
  for (std::size_t a = 0; a < simple.size(); ++a) {
    CHECK(mc.mean_belief[a] == Rational(static_cast<std::int64_t>(simple[a]), survivors));
  }
  CHECK(verify_general_relabel(p, point, exact).overall());

  const auto two_experts = LabelingProcessSpec::make(
      {coot_label(), FrameSubset::full(coot_frame())}, {Rational(7, 10), Rational(3, 10)});
  const auto report = verify_general_relabel(p, two_experts, MonteCarloOptions{400, 11, Rational(3, 100), 2});
  CHECK(report.overall());
  CHECK(report.checks().size() == 3);

  // Same seed, different thread counts.
  const auto seq = monte_carlo_belief(p, two_experts, 64, 99, 1);
  const auto par = monte_carlo_belief(p, two_experts, 64, 99, 3);
  CHECK(seq.mean_belief == par.mean_belief);

  const Frame f = Frame::make({"a", "b"});
  const Population only_a(f, {PopulationRecord("x", FrameSubset::from_names(f, {"a"}))});
  const auto miss = LabelingProcessSpec::point(FrameSubset::from_names(f, {"b"}));
  CHECK_THROWS_AS(monte_carlo_belief(only_a, miss, 5, 1), Error);
  const auto degenerate = verify_general_relabel(only_a, miss, exact);
  CHECK(degenerate.overall());
  CHECK(degenerate.count(CheckStatus::skipped) == 1);
}

TEST_CASE("report rendering") {
  VerificationReport r;
  r.expect_equal("same", Rational(1, 2), Rational(2, 4));
  r.expect_equal("different", Rational(1, 3), Rational(1, 2), "why");
  r.skip("later", "not applicable");
  CHECK_FALSE(r.overall());
  CHECK(r.count(CheckStatus::pass) == 1);
  const auto text = r.to_text();
  CHECK(text.find("FAIL    different") != std::string::npos);
  CHECK(text.find("1/3 vs 1/2") != std::string::npos);
  CHECK(text.find("OVERALL FAIL") != std::string::npos);
  const auto json = r.to_json();
  CHECK(json.find("\"overall\": false") != std::string::npos);
  CHECK(json.find("\"status\": \"SKIPPED\"") != std::string::npos);
}
